#ifndef RESINT_ORACLE_HPP
#define RESINT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "resint/numpoly.hpp"
#include "resint/series.hpp"
#include "resint/symfunc.hpp"

namespace resint {

// Coefficient field for the rank computations.  Default prime keeps the
// degreewise ranks fast; the rational mode is the certainty recheck.
struct FieldSpec {
    bool rational = false;
    uint32_t prime = 32003;
};

using Exponents = std::vector<int>;

struct IdealPresentation {
    struct Generator {
        int degree = 0;
        std::vector<std::pair<Exponents, Rat>> terms;
    };

    int numVars = 0;
    std::vector<Generator> gens;
    FieldSpec field;
    uint64_t seed = 0;

    void validate() const;
    int min_generator_degree() const;
};

struct HilbertFunctionTable {
    std::vector<Int> h;  // h(0..dmax)
    std::optional<int> stabilizedFrom;  // first degree of detected polynomial behavior
};

Int dim_polynomial_ring(int numVars, int d);

// dimension of the degree-d graded piece of the ideal: rank of the span of
// monomial multiples of the generators, exact over the chosen field
long graded_dim(const IdealPresentation& ideal, int d);

// generators of I^power as all power-fold products
IdealPresentation power_presentation(const IdealPresentation& ideal, int power);

// h(d) = dim R_d - dim (I^power)_d for d = 0..dmax
HilbertFunctionTable hilbert_function_quotient(const IdealPresentation& ideal, int power,
                                               int dmax);

// h(R/(A:I)) degreewise: (A:I)_d is the kernel of R_d -> (+)_i R_{d+deg g_i}/A,
// f |-> (f g_i); membership against the generators of I suffices degreewise
HilbertFunctionTable colon_hilbert_function(const IdealPresentation& A,
                                            const IdealPresentation& I, int dmax);

// f_i = random field combinations of the monomial multiples of the generators
// of I in the requested degrees; deterministic under seed, resamples (up to 5
// derived seeds) if a form degenerates to zero
IdealPresentation random_forms(const IdealPresentation& I, const DegreeList& degrees,
                               uint64_t seed);

// finite-difference fit of degree dim-1 accepted only when it matches dim+2
// trailing values; never guesses (throws NotStabilizedError)
NumericalPolynomial fit_hilbert_polynomial(const HilbertFunctionTable& table, int dim);
// the fit plus the first degree from which the polynomial matches
std::pair<NumericalPolynomial, int> fit_hilbert_polynomial_detail(const HilbertFunctionTable& table,
                                                                  int dim);

// exact Hilbert series reconstructed from a stabilized table
RationalSeries table_to_series(const HilbertFunctionTable& table, int dim);
// e-vector at the module's own dimension with extended entries through kmax
std::vector<Rat> table_to_evec(const HilbertFunctionTable& table, int dim, int kmax);

// exact [[R/J]] for a monomial ideal by recursive pivot splitting
// [[R/J]] = t [[R/(J:x)]] + [[R/(J+x)]]
RationalSeries monomial_series(const std::vector<Exponents>& monomialGens, int numVars);

}  // namespace resint

#endif
