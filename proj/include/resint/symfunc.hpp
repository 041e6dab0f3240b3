#ifndef RESINT_SYMFUNC_HPP
#define RESINT_SYMFUNC_HPP

#include <vector>

#include "resint/laurent.hpp"

namespace resint {

// Degrees d_1..d_s of the chosen forms.  Entries are >= 1 in the weighted
// uses; the all-zeros mode carries the simplified (degree-free) relations.
struct DegreeList {
    std::vector<int> d;

    DegreeList() = default;
    DegreeList(std::initializer_list<int> l) : d(l) { validate(); }
    explicit DegreeList(std::vector<int> v) : d(std::move(v)) { validate(); }

    int size() const { return static_cast<int>(d.size()); }
    bool zero_mode() const;
    void validate() const;
};

// sigma_m(t^{d_1}, ..., t^{d_s}), elementary symmetric
LaurentPoly elementary_sym(int m, const DegreeList& degrees);
// s_j(t^{d_1}, ..., t^{d_s}), complete homogeneous
LaurentPoly complete_sym(int j, const DegreeList& degrees);
// Delta_s = prod (1 - t^{d_i})
LaurentPoly delta_poly(const DegreeList& degrees);

// numeric elementary symmetric function of the degrees themselves
Int sigma_value(const DegreeList& degrees, int m);

// c_k(d_1..d_s) = (-1)^k sum over i_j >= 1, sum i_j = k+s of prod C(d_j, i_j);
// the coefficient of (1-t)^{k+s} in Delta_s.
Int bezout_c(const DegreeList& degrees, int k);

// e_l(d_1..d_s) = sum over i_j >= 1, sum i_j = l+s of prod C(d_j, i_j)
Int theorem19_e(const DegreeList& degrees, int ell);

// coefficients of (t-1)^0..(t-1)^order of p about t=1 (re-export of the
// polynomial-level expansion under the operation name used by callers)
std::vector<Rat> taylor_at_one(const LaurentPoly& p, int order);

}  // namespace resint

#endif
