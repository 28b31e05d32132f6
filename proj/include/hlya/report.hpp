#pragma once

#include "hlya/parallel.hpp"
#include "hlya/poly.hpp"
#include "hlya/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hlya {

/// First failing basis tuple of a condition, in lexicographic order.
/// Indices are 1-based (e_1, ..., e_n) to match the written conventions.
/// For λ-polynomial checks, lambda_degrees lists the degrees whose
/// coefficients are nonzero in the defect.
struct ConditionWitness {
    std::vector<int> tuple;
    std::vector<std::string> defect;
    std::vector<int> lambda_degrees;
};

struct ConditionStatus {
    std::string name;
    bool passed = true;
    long long fail_count = 0;
    std::optional<ConditionWitness> witness;
};

struct CheckReport {
    std::vector<ConditionStatus> conditions;

    bool passed() const {
        for (const auto& c : conditions)
            if (!c.passed) return false;
        return true;
    }

    const ConditionStatus* find(std::string_view name) const {
        for (const auto& c : conditions)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::vector<std::string> failing_names() const {
        std::vector<std::string> out;
        for (const auto& c : conditions)
            if (!c.passed) out.push_back(c.name);
        return out;
    }
};

namespace detail {

inline std::string scalar_str(const Rational& r) { return r.str(); }
inline std::string scalar_str(const Poly& p) { return p.str(); }

inline void defect_degrees(const Rational&, std::vector<int>&) {}
inline void defect_degrees(const Poly& p, std::vector<int>& degs) {
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k).is_zero()) continue;
        bool seen = false;
        for (int d : degs) seen = seen || d == k;
        if (!seen) degs.push_back(k);
    }
}

/// Decodes a flat lexicographic index into a 1-based tuple of the given arity.
inline std::vector<int> unpack_tuple(std::size_t idx, int n, int arity) {
    std::vector<int> t(static_cast<std::size_t>(arity));
    for (int k = arity - 1; k >= 0; --k) {
        t[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(n)) + 1;
        idx /= static_cast<std::size_t>(n);
    }
    return t;
}

template <class K>
ConditionStatus make_status(std::string name, const ScanResult<K>& scan, int n, int arity) {
    ConditionStatus st;
    st.name = std::move(name);
    st.fail_count = scan.fail_count;
    st.passed = scan.fail_count == 0;
    if (scan.first) {
        ConditionWitness w;
        w.tuple = unpack_tuple(scan.first->index, n, arity);
        for (const auto& x : scan.first->defect) {
            w.defect.push_back(scalar_str(x));
            defect_degrees(x, w.lambda_degrees);
        }
        std::sort(w.lambda_degrees.begin(), w.lambda_degrees.end());
        st.witness = std::move(w);
    }
    return st;
}

} // namespace detail
} // namespace hlya
