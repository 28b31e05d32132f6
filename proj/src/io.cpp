#include "hlya/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace hlya {
namespace io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t i) {
    return where + "[" + std::to_string(i) + "]";
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError("expected an object", where);
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"", where);
    return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
    const json& f = field(j, key, where);
    if (!f.is_number_integer())
        throw ParseError(std::string("field \"") + key + "\" must be an integer", where);
    return f.get<int>();
}

const json& array_of(const json& j, std::size_t len, const std::string& where) {
    if (!j.is_array()) throw ParseError("expected an array", where);
    if (j.size() != len)
        throw ParseError("expected " + std::to_string(len) + " entries, found " +
                             std::to_string(j.size()),
                         where);
    return j;
}

} // namespace

// --- serialization ----------------------------------------------------------

json to_json(const Rational& r) { return r.str(); }

json to_json(const Poly& p) {
    json arr = json::array();
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) arr.push_back(p.coeff(k).str());
    if (p.is_zero()) arr = json::array({"0"});
    return arr;
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Vec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

namespace {

template <class K, class EntryFn>
json tensor3_to_json(const HomLYAlgebraT<K>& A, EntryFn entry) {
    json bi = json::array();
    for (int i = 0; i < A.dim; ++i) {
        json bj = json::array();
        for (int j = 0; j < A.dim; ++j) {
            json bk = json::array();
            for (int k = 0; k < A.dim; ++k) bk.push_back(entry(A.b(i, j, k)));
            bj.push_back(std::move(bk));
        }
        bi.push_back(std::move(bj));
    }
    return bi;
}

template <class K, class EntryFn>
json tensor4_to_json(const HomLYAlgebraT<K>& A, EntryFn entry) {
    json ti = json::array();
    for (int i = 0; i < A.dim; ++i) {
        json tj = json::array();
        for (int j = 0; j < A.dim; ++j) {
            json tk = json::array();
            for (int k = 0; k < A.dim; ++k) {
                json tl = json::array();
                for (int l = 0; l < A.dim; ++l) tl.push_back(entry(A.t(i, j, k, l)));
                tk.push_back(std::move(tl));
            }
            tj.push_back(std::move(tk));
        }
        ti.push_back(std::move(tj));
    }
    return ti;
}

} // namespace

json to_json(const HomLYAlgebra& A) {
    json j;
    j["dim"] = A.dim;
    j["alpha"] = to_json(A.alpha);
    j["binary"] = tensor3_to_json(A, [](const Rational& r) { return json(r.str()); });
    j["ternary"] = tensor4_to_json(A, [](const Rational& r) { return json(r.str()); });
    return j;
}

json to_json(const LambdaAlgebra& L) {
    json j;
    j["dim"] = L.dim;
    j["alpha"] = to_json(L.alpha);
    j["binary"] = tensor3_to_json(L, [](const Poly& p) { return to_json(p); });
    j["ternary"] = tensor4_to_json(L, [](const Poly& p) { return to_json(p); });
    return j;
}

json to_json(const Representation& R) {
    json j;
    j["algebra"] = to_json(R.algebra);
    j["vdim"] = R.vdim;
    j["beta"] = to_json(R.beta);
    json rho = json::array();
    for (const auto& m : R.rho) rho.push_back(to_json(m));
    j["rho"] = std::move(rho);
    json d = json::array(), th = json::array();
    for (int i = 0; i < R.algebra.dim; ++i) {
        json di = json::array(), ti = json::array();
        for (int k = 0; k < R.algebra.dim; ++k) {
            di.push_back(to_json(R.d_at(i, k)));
            ti.push_back(to_json(R.theta_at(i, k)));
        }
        d.push_back(std::move(di));
        th.push_back(std::move(ti));
    }
    j["D"] = std::move(d);
    j["theta"] = std::move(th);
    return j;
}

namespace {

json cochain_coeffs_to_json(const Cochain& c, std::vector<int>& prefix) {
    json out = json::array();
    if (static_cast<int>(prefix.size()) == c.arity) {
        for (int comp = 0; comp < c.vdim; ++comp)
            out.push_back(c.at(prefix, comp).str());
        return out;
    }
    for (int i = 0; i < c.dim; ++i) {
        prefix.push_back(i);
        out.push_back(cochain_coeffs_to_json(c, prefix));
        prefix.pop_back();
    }
    return out;
}

} // namespace

json to_json(const Cochain& c) {
    json j;
    j["arity"] = c.arity;
    std::vector<int> prefix;
    j["coeffs"] = cochain_coeffs_to_json(c, prefix);
    return j;
}

json to_json(const CocyclePair& p) {
    json j;
    j["nu"] = to_json(p.nu);
    j["omega"] = to_json(p.omega);
    return j;
}

json to_json(const AbelianExtension& E) {
    json j;
    j["total"] = to_json(E.total);
    j["inj"] = to_json(E.inj);
    j["proj"] = to_json(E.proj);
    j["base"] = to_json(E.base);
    j["module_twist"] = to_json(E.module_twist);
    return j;
}

json to_json(const CheckReport& r) {
    json j;
    j["passed"] = r.passed();
    json conds = json::array();
    for (const auto& c : r.conditions) {
        json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        cj["failures"] = c.fail_count;
        if (c.witness) {
            json w;
            w["tuple"] = c.witness->tuple;
            w["defect"] = c.witness->defect;
            if (!c.witness->lambda_degrees.empty())
                w["lambda_degrees"] = c.witness->lambda_degrees;
            cj["witness"] = std::move(w);
        }
        conds.push_back(std::move(cj));
    }
    j["conditions"] = std::move(conds);
    return j;
}

json to_json(const MorphismReport& r) {
    CheckReport cr;
    cr.conditions = r.conditions;
    return to_json(cr);
}

json to_json(const Cohomology23& h) {
    json j;
    j["c2_dim"] = h.c2.dimension();
    j["c3_dim"] = h.c3.dimension();
    j["z_dim"] = h.zdim;
    j["b_dim"] = h.bdim;
    j["h2_dim"] = h.hdim2;
    j["h3_dim"] = h.hdim3;
    j["h_joint_dim"] = h.hdim_joint;
    json reps = json::array();
    for (const auto& p : h.representatives) reps.push_back(to_json(p));
    j["representatives"] = std::move(reps);
    return j;
}

// --- parsing -----------------------------------------------------------------

Rational rational_from_json(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError("expected a rational string \"p/q\"", where);
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), where);
    }
}

Poly poly_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError("expected a polynomial coefficient array", where);
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < j.size(); ++k)
        coeffs.push_back(rational_from_json(j[k], at(where, k)));
    return Poly::from_coeffs(std::move(coeffs));
}

Matrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError("expected a matrix (array of rows)", where);
    std::vector<Vec> rows;
    std::size_t cols = 0;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        if (!row.is_array()) throw ParseError("expected a matrix row", at(where, r));
        if (r == 0) cols = row.size();
        if (row.size() != cols) throw ParseError("ragged matrix rows", at(where, r));
        Vec v;
        for (std::size_t c = 0; c < row.size(); ++c)
            v.push_back(rational_from_json(row[c], at(at(where, r), c)));
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return Matrix(0, 0);
    return Matrix::from_rows(rows);
}

namespace {

template <class K, class EntryParser>
void parse_tensors(HomLYAlgebraT<K>& A, const json& j, const std::string& where,
                   EntryParser parse_entry) {
    const int n = A.dim;
    const auto sz = static_cast<std::size_t>(n);
    const json& bi = array_of(field(j, "binary", where), sz, at(where, "binary"));
    for (int i = 0; i < n; ++i) {
        const std::string wi = at(at(where, "binary"), static_cast<std::size_t>(i));
        const json& bj = array_of(bi[i], sz, wi);
        for (int jj = 0; jj < n; ++jj) {
            const std::string wj = at(wi, static_cast<std::size_t>(jj));
            const json& bk = array_of(bj[jj], sz, wj);
            for (int k = 0; k < n; ++k)
                A.b(i, jj, k) = parse_entry(bk[k], at(wj, static_cast<std::size_t>(k)));
        }
    }
    const json& ti = array_of(field(j, "ternary", where), sz, at(where, "ternary"));
    for (int i = 0; i < n; ++i) {
        const std::string wi = at(at(where, "ternary"), static_cast<std::size_t>(i));
        const json& tj = array_of(ti[i], sz, wi);
        for (int jj = 0; jj < n; ++jj) {
            const std::string wj = at(wi, static_cast<std::size_t>(jj));
            const json& tk = array_of(tj[jj], sz, wj);
            for (int k = 0; k < n; ++k) {
                const std::string wk = at(wj, static_cast<std::size_t>(k));
                const json& tl = array_of(tk[k], sz, wk);
                for (int l = 0; l < n; ++l)
                    A.t(i, jj, k, l) = parse_entry(tl[l], at(wk, static_cast<std::size_t>(l)));
            }
        }
    }
}

} // namespace

HomLYAlgebra algebra_from_json(const json& j, const std::string& where) {
    const int n = int_field(j, "dim", where);
    if (n < 0) throw ParseError("dim must be nonnegative", at(where, "dim"));
    Matrix alpha = matrix_from_json(field(j, "alpha", where), at(where, "alpha"));
    if (alpha.rows() != n || alpha.cols() != n)
        throw ParseError("alpha must be dim x dim", at(where, "alpha"));
    HomLYAlgebra A = HomLYAlgebra::zero(n, std::move(alpha));
    parse_tensors(A, j, where,
                  [](const json& e, const std::string& w) { return rational_from_json(e, w); });
    return A;
}

LambdaAlgebra lambda_algebra_from_json(const json& j, const std::string& where) {
    const int n = int_field(j, "dim", where);
    if (n < 0) throw ParseError("dim must be nonnegative", at(where, "dim"));
    Matrix alpha = matrix_from_json(field(j, "alpha", where), at(where, "alpha"));
    if (alpha.rows() != n || alpha.cols() != n)
        throw ParseError("alpha must be dim x dim", at(where, "alpha"));
    LambdaAlgebra L = LambdaAlgebra::zero(n, std::move(alpha));
    parse_tensors(L, j, where,
                  [](const json& e, const std::string& w) { return poly_from_json(e, w); });
    return L;
}

bool looks_like_lambda_algebra(const json& j) {
    if (!j.is_object() || !j.contains("binary")) return false;
    const json* cur = &j["binary"];
    for (int depth = 0; depth < 3; ++depth) { // descend the i, j, k levels
        if (!cur->is_array() || cur->empty()) return false;
        cur = &(*cur)[0];
    }
    return cur->is_array();
}

Representation representation_from_json(const json& j, const std::string& where) {
    Representation R;
    R.algebra = algebra_from_json(field(j, "algebra", where), at(where, "algebra"));
    R.vdim = int_field(j, "vdim", where);
    if (R.vdim < 0) throw ParseError("vdim must be nonnegative", at(where, "vdim"));
    R.beta = matrix_from_json(field(j, "beta", where), at(where, "beta"));

    const auto n = static_cast<std::size_t>(R.algebra.dim);
    const json& rho = array_of(field(j, "rho", where), n, at(where, "rho"));
    for (std::size_t i = 0; i < n; ++i)
        R.rho.push_back(matrix_from_json(rho[i], at(at(where, "rho"), i)));

    for (const char* key : {"D", "theta"}) {
        const json& outer = array_of(field(j, key, where), n, at(where, key));
        for (std::size_t i = 0; i < n; ++i) {
            const std::string wi = at(at(where, key), i);
            const json& inner = array_of(outer[i], n, wi);
            for (std::size_t k = 0; k < n; ++k) {
                Matrix m = matrix_from_json(inner[k], at(wi, k));
                if (std::string(key) == "D")
                    R.dmap.push_back(std::move(m));
                else
                    R.theta.push_back(std::move(m));
            }
        }
    }
    if (!R.shape_ok()) throw ParseError("representation shapes inconsistent", where);
    return R;
}

namespace {

void parse_cochain_level(Cochain& c, const json& j, std::vector<int>& prefix,
                         const std::string& where) {
    if (static_cast<int>(prefix.size()) == c.arity) {
        const json& comps = array_of(j, static_cast<std::size_t>(c.vdim), where);
        for (int comp = 0; comp < c.vdim; ++comp)
            c.at(prefix, comp) =
                rational_from_json(comps[comp], at(where, static_cast<std::size_t>(comp)));
        return;
    }
    const json& level = array_of(j, static_cast<std::size_t>(c.dim), where);
    for (int i = 0; i < c.dim; ++i) {
        prefix.push_back(i);
        parse_cochain_level(c, level[i], prefix, at(where, static_cast<std::size_t>(i)));
        prefix.pop_back();
    }
}

} // namespace

Cochain cochain_from_json(const json& j, const std::string& where) {
    const int arity = int_field(j, "arity", where);
    if (arity < 1) throw ParseError("arity must be >= 1", at(where, "arity"));
    const json* cur = &field(j, "coeffs", where);
    // infer dim from the outer levels and vdim from the innermost one
    int dim = 0, vdim = 0;
    {
        const json* probe = cur;
        for (int k = 0; k < arity; ++k) {
            if (!probe->is_array() || probe->empty())
                throw ParseError("coeffs nesting shallower than arity", at(where, "coeffs"));
            if (k == 0) dim = static_cast<int>(probe->size());
            probe = &(*probe)[0];
        }
        if (!probe->is_array())
            throw ParseError("innermost coeffs level must be a component array",
                             at(where, "coeffs"));
        vdim = static_cast<int>(probe->size());
    }
    Cochain c = Cochain::zeros(arity, dim, vdim);
    std::vector<int> prefix;
    parse_cochain_level(c, *cur, prefix, at(where, "coeffs"));
    return c;
}

CocyclePair pair_from_json(const json& j, const std::string& where) {
    CocyclePair p;
    p.nu = cochain_from_json(field(j, "nu", where), at(where, "nu"));
    p.omega = cochain_from_json(field(j, "omega", where), at(where, "omega"));
    if (p.nu.arity != 2) throw ParseError("nu must have arity 2", at(where, "nu"));
    if (p.omega.arity != 3) throw ParseError("omega must have arity 3", at(where, "omega"));
    if (p.nu.dim != p.omega.dim || p.nu.vdim != p.omega.vdim)
        throw ParseError("nu and omega must share dim and vdim", where);
    return p;
}

AbelianExtension extension_from_json(const json& j, const std::string& where) {
    AbelianExtension E;
    E.total = algebra_from_json(field(j, "total", where), at(where, "total"));
    E.inj = matrix_from_json(field(j, "inj", where), at(where, "inj"));
    E.proj = matrix_from_json(field(j, "proj", where), at(where, "proj"));
    E.base = algebra_from_json(field(j, "base", where), at(where, "base"));
    E.module_twist = matrix_from_json(field(j, "module_twist", where), at(where, "module_twist"));
    E.module_dim = E.module_twist.rows();
    if (!E.shape_ok()) throw ParseError("extension shapes inconsistent", where);
    return E;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file", path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), path);
    }
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file", path);
    out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string report_to_text(const CheckReport& r) {
    std::ostringstream os;
    for (const auto& c : r.conditions) {
        os << (c.passed ? "pass" : "FAIL") << "  " << c.name;
        if (!c.passed) {
            os << "  failures=" << c.fail_count;
            if (c.witness) {
                os << "  witness=(";
                for (std::size_t i = 0; i < c.witness->tuple.size(); ++i)
                    os << (i ? "," : "") << c.witness->tuple[i];
                os << ") defect=[";
                for (std::size_t i = 0; i < c.witness->defect.size(); ++i)
                    os << (i ? ", " : "") << c.witness->defect[i];
                os << "]";
                if (!c.witness->lambda_degrees.empty()) {
                    os << " lambda_degrees=[";
                    for (std::size_t i = 0; i < c.witness->lambda_degrees.size(); ++i)
                        os << (i ? "," : "") << c.witness->lambda_degrees[i];
                    os << "]";
                }
            }
        }
        os << "\n";
    }
    os << (r.passed() ? "RESULT: pass" : "RESULT: fail") << "\n";
    return os.str();
}

} // namespace io
} // namespace hlya
