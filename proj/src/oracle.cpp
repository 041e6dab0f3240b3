#include "resint/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace resint {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// ---- prime-field dense rank ----

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long rank_fp(std::vector<std::vector<uint64_t>>& rows, size_t ncols, uint64_t p) {
    long rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c] % p == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        uint64_t inv = pow_mod(rows[r][c], p - 2, p);
        for (size_t j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv % p;
        for (size_t i = r + 1; i < rows.size(); ++i) {
            uint64_t f = rows[i][c] % p;
            if (!f) continue;
            uint64_t fneg = p - f;
            for (size_t j = c; j < ncols; ++j)
                rows[i][j] = (rows[i][j] + fneg * rows[r][j]) % p;
        }
        ++r;
        ++rank;
    }
    return rank;
}

// ---- integer fraction-controlled rank (rational mode) ----

void strip_content(std::vector<Int>& row) {
    Int g = 0;
    for (const Int& x : row) {
        if (x == 0) continue;
        g = gcd(g, x);
        if (g == 1) return;
    }
    if (g > 1)
        for (Int& x : row) x /= g;
}

long rank_int(std::vector<std::vector<Int>>& rows, size_t ncols) {
    long rank = 0;
    size_t r = 0;
    for (auto& row : rows) strip_content(row);
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t sel = rows.size();
        Int best;
        for (size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Int a = abs(rows[i][c]);
            if (sel == rows.size() || a < best) {  // smallest pivot keeps growth down
                sel = i;
                best = a;
            }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Int g = gcd(rows[i][c], rows[r][c]);
            Int a = rows[r][c] / g;
            Int b = rows[i][c] / g;
            for (size_t j = c; j < ncols; ++j)
                rows[i][j] = rows[i][j] * a - rows[r][j] * b;
            strip_content(rows[i]);
        }
        ++r;
        ++rank;
    }
    return rank;
}

// ---- monomial bookkeeping ----

void enumerate_monomials(int nv, int d, std::vector<Exponents>& out) {
    Exponents cur(static_cast<size_t>(nv), 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == nv - 1) {
            cur[static_cast<size_t>(i)] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[static_cast<size_t>(i)] = e;
            self(self, i + 1, rem - e);
        }
    };
    if (nv == 0) {
        if (d == 0) out.push_back({});
        return;
    }
    rec(rec, 0, d);
}

struct MonoBasis {
    std::vector<Exponents> list;
    std::map<Exponents, int> index;

    explicit MonoBasis(int nv, int d) {
        enumerate_monomials(nv, d, list);
        for (size_t i = 0; i < list.size(); ++i) index.emplace(list[i], static_cast<int>(i));
    }
    size_t size() const { return list.size(); }
};

uint64_t to_fp(const Rat& q, uint64_t p) {
    Int num = q.get_num() % Int(static_cast<unsigned long>(p));
    Int den = q.get_den() % Int(static_cast<unsigned long>(p));
    uint64_t n = mpz_class(num < 0 ? num + Int(static_cast<unsigned long>(p)) : num).get_ui();
    uint64_t d = mpz_class(den).get_ui();
    if (d == 0) throw ValidationError("denominator divisible by the working prime");
    return n * pow_mod(d, p - 2, p) % p;
}

// rows of the degree-d piece of the ideal, as coefficient vectors over the
// monomial basis; integer-cleared for the rational mode
template <typename Cell, typename Conv>
void ideal_rows(const IdealPresentation& ideal, int d, const MonoBasis& basis,
                std::vector<std::vector<Cell>>& rows, Conv conv) {
    for (const auto& gen : ideal.gens) {
        if (d < gen.degree) continue;
        std::vector<Exponents> mult;
        enumerate_monomials(ideal.numVars, d - gen.degree, mult);
        for (const auto& m : mult) {
            std::vector<Cell> row(basis.size(), Cell(0));
            for (const auto& [exps, coeff] : gen.terms) {
                Exponents e(exps);
                for (size_t i = 0; i < e.size(); ++i) e[i] += m[i];
                row[static_cast<size_t>(basis.index.at(e))] =
                    row[static_cast<size_t>(basis.index.at(e))] + conv(coeff);
            }
            rows.push_back(std::move(row));
        }
    }
}

Int clear_to_int(const Rat& q) {
    if (!is_integer(q)) throw ValidationError("rational-mode presentations expect integer coefficients");
    return q.get_num();
}

// scaling a generator clears denominators without changing the ideal
IdealPresentation cleared_denominators(const IdealPresentation& p) {
    IdealPresentation out = p;
    for (auto& g : out.gens) {
        Int l = 1;
        for (const auto& [e, c] : g.terms) l = lcm(l, Int(c.get_den()));
        if (l != 1)
            for (auto& [e, c] : g.terms) c *= Rat(l);
    }
    return out;
}

}  // namespace

void IdealPresentation::validate() const {
    if (numVars < 1) throw ValidationError("presentation needs at least one variable");
    if (!field.rational && !is_prime(field.prime))
        throw ValidationError("field characteristic must be prime");
    for (const auto& g : gens) {
        for (const auto& [e, c] : g.terms) {
            if (static_cast<int>(e.size()) != numVars)
                throw ValidationError("exponent tuple length != numVars");
            long deg = 0;
            for (int x : e) {
                if (x < 0) throw ValidationError("negative exponent in generator");
                deg += x;
            }
            if (deg != g.degree) throw ValidationError("generator term degree mismatch");
            (void)c;
        }
    }
}

int IdealPresentation::min_generator_degree() const {
    int m = -1;
    for (const auto& g : gens)
        if (m < 0 || g.degree < m) m = g.degree;
    return m;
}

Int dim_polynomial_ring(int numVars, int d) {
    if (d < 0) return 0;
    return binomial(Int(d + numVars - 1), numVars - 1);
}

long graded_dim(const IdealPresentation& ideal, int d) {
    if (d < 0) throw ValidationError("graded_dim: d >= 0 required");
    ideal.validate();
    MonoBasis basis(ideal.numVars, d);
    if (ideal.field.rational) {
        std::vector<std::vector<Int>> rows;
        ideal_rows(cleared_denominators(ideal), d, basis, rows, clear_to_int);
        return rank_int(rows, basis.size());
    }
    uint64_t p = ideal.field.prime;
    std::vector<std::vector<uint64_t>> rows;
    ideal_rows(ideal, d, basis, rows, [&](const Rat& q) { return to_fp(q, p); });
    return rank_fp(rows, basis.size(), p);
}

IdealPresentation power_presentation(const IdealPresentation& ideal, int power) {
    if (power < 1) throw ValidationError("power_presentation: power >= 1 required");
    IdealPresentation out;
    out.numVars = ideal.numVars;
    out.field = ideal.field;
    out.seed = ideal.seed;
    size_t n = ideal.gens.size();
    std::vector<size_t> pick(static_cast<size_t>(power), 0);
    auto rec = [&](auto&& self, size_t pos, size_t start) -> void {
        if (pos == pick.size()) {
            IdealPresentation::Generator g;
            std::map<Exponents, Rat> acc;
            acc.emplace(Exponents(static_cast<size_t>(ideal.numVars), 0), Rat(1));
            g.degree = 0;
            for (size_t idx : pick) {
                const auto& f = ideal.gens[idx];
                g.degree += f.degree;
                std::map<Exponents, Rat> next;
                for (const auto& [e1, c1] : acc) {
                    for (const auto& [e2, c2] : f.terms) {
                        Exponents e(e1);
                        for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                        auto [it, fresh] = next.emplace(e, c1 * c2);
                        if (!fresh) it->second += c1 * c2;
                    }
                }
                acc = std::move(next);
            }
            for (auto& [e, c] : acc)
                if (c != 0) g.terms.emplace_back(e, c);
            out.gens.push_back(std::move(g));
            return;
        }
        for (size_t i = start; i < n; ++i) {
            pick[pos] = i;
            self(self, pos + 1, i);
        }
    };
    if (!ideal.gens.empty()) rec(rec, 0, 0);
    return out;
}

HilbertFunctionTable hilbert_function_quotient(const IdealPresentation& ideal, int power,
                                               int dmax) {
    if (power < 1 || dmax < 0) throw ValidationError("hilbert_function_quotient: bad arguments");
    IdealPresentation pw = power == 1 ? ideal : power_presentation(ideal, power);
    HilbertFunctionTable tab;
    tab.h.reserve(static_cast<size_t>(dmax) + 1);
    for (int d = 0; d <= dmax; ++d)
        tab.h.push_back(dim_polynomial_ring(ideal.numVars, d) - Int(graded_dim(pw, d)));
    return tab;
}

namespace {

// echelon forms used by the colon: the constraint rows are block diagonal
// (one block per generator of I), so each block is eliminated on its own and
// only the coupled quotient rows see the full width

struct FpElim {
    uint64_t p;
    struct Echelon {
        std::vector<std::pair<size_t, std::vector<uint64_t>>> rows;  // pivot col, unit-pivot row
    };
    void reduce(std::vector<uint64_t>& row, size_t offset, const Echelon& e) const {
        for (const auto& [c, prow] : e.rows) {
            uint64_t f = row[offset + c] % p;
            if (!f) continue;
            uint64_t fneg = p - f;
            for (size_t j = c; j < prow.size(); ++j)
                row[offset + j] = (row[offset + j] + fneg * prow[j]) % p;
        }
    }
    Echelon echelon(std::vector<std::vector<uint64_t>>& rows, size_t ncols) const {
        Echelon e;
        for (auto& row : rows) {
            reduce(row, 0, e);
            size_t c = 0;
            while (c < ncols && row[c] % p == 0) ++c;
            if (c == ncols) continue;
            uint64_t inv = pow_mod(row[c], p - 2, p);
            for (size_t j = c; j < ncols; ++j) row[j] = row[j] % p * inv % p;
            e.rows.emplace_back(c, std::move(row));
        }
        return e;
    }
    long rank(std::vector<std::vector<uint64_t>>& rows, size_t ncols) const {
        return rank_fp(rows, ncols, p);
    }
};

struct IntElim {
    struct Echelon {
        std::vector<std::pair<size_t, std::vector<Int>>> rows;
    };
    void reduce(std::vector<Int>& row, size_t offset, const Echelon& e) const {
        for (const auto& [c, prow] : e.rows) {
            if (row[offset + c] == 0) continue;
            Int g = gcd(row[offset + c], prow[c]);
            Int a = prow[c] / g;
            Int b = row[offset + c] / g;
            // cross-multiplication must scale the whole row, not just the block
            if (a != 1)
                for (Int& x : row) x *= a;
            for (size_t j = c; j < prow.size(); ++j) row[offset + j] -= prow[j] * b;
        }
        strip_content(row);  // uniform scaling keeps the integer entries small
    }
    Echelon echelon(std::vector<std::vector<Int>>& rows, size_t ncols) const {
        Echelon e;
        for (auto& row : rows) {
            reduce(row, 0, e);
            size_t c = 0;
            while (c < ncols && row[c] == 0) ++c;
            if (c == ncols) continue;
            e.rows.emplace_back(c, std::move(row));
        }
        return e;
    }
    long rank(std::vector<std::vector<Int>>& rows, size_t ncols) const {
        return rank_int(rows, ncols);
    }
};

template <typename Cell, typename Elim, typename Conv>
void colon_run(const IdealPresentation& A, const IdealPresentation& I, int dmax,
               const Elim& elim, Conv conv, HilbertFunctionTable& tab) {
    int nv = A.numVars;
    for (int d = 0; d <= dmax; ++d) {
        MonoBasis base_d(nv, d);
        std::vector<size_t> offsets;
        size_t total = 0;
        std::vector<MonoBasis> bases;
        bases.reserve(I.gens.size());
        for (const auto& g : I.gens) {
            bases.emplace_back(nv, d + g.degree);
            offsets.push_back(total);
            total += bases.back().size();
        }
        // per-block echelons of A in the target degrees
        std::vector<typename Elim::Echelon> ech;
        for (size_t gi = 0; gi < I.gens.size(); ++gi) {
            std::vector<std::vector<Cell>> rows;
            ideal_rows(A, d + I.gens[gi].degree, bases[gi], rows, conv);
            ech.push_back(elim.echelon(rows, bases[gi].size()));
        }
        // quotient rows f -> (f g_i mod A), reduced blockwise
        std::vector<std::vector<Cell>> phi;
        phi.reserve(base_d.size());
        for (const auto& mono : base_d.list) {
            std::vector<Cell> row(total, Cell(0));
            for (size_t gi = 0; gi < I.gens.size(); ++gi) {
                for (const auto& [exps, coeff] : I.gens[gi].terms) {
                    Exponents e(exps);
                    for (size_t i = 0; i < e.size(); ++i) e[i] += mono[i];
                    size_t at = offsets[gi] + static_cast<size_t>(bases[gi].index.at(e));
                    row[at] = row[at] + conv(coeff);
                }
            }
            for (size_t gi = 0; gi < I.gens.size(); ++gi) elim.reduce(row, offsets[gi], ech[gi]);
            phi.push_back(std::move(row));
        }
        // h(R/(A:I))(d) = dim R_d - dim(A:I)_d = rank of phi modulo the A-span
        tab.h.push_back(Int(elim.rank(phi, total)));
    }
}

}  // namespace

HilbertFunctionTable colon_hilbert_function(const IdealPresentation& A,
                                            const IdealPresentation& I, int dmax) {
    A.validate();
    I.validate();
    if (A.numVars != I.numVars) throw ValidationError("colon: numVars mismatch");
    if (A.field.rational != I.field.rational || A.field.prime != I.field.prime)
        throw ValidationError("colon: field mismatch");
    HilbertFunctionTable tab;
    if (A.field.rational) {
        colon_run<Int>(cleared_denominators(A), cleared_denominators(I), dmax, IntElim{},
                       clear_to_int, tab);
    } else {
        uint64_t p = A.field.prime;
        colon_run<uint64_t>(A, I, dmax, FpElim{p},
                            [&](const Rat& q) { return to_fp(q, p); }, tab);
    }
    return tab;
}

IdealPresentation random_forms(const IdealPresentation& I, const DegreeList& degrees,
                               uint64_t seed) {
    I.validate();
    int mindeg = I.min_generator_degree();
    if (mindeg < 0) throw ValidationError("random_forms: ideal has no generators");
    for (int dd : degrees.d)
        if (dd < mindeg)
            throw ValidationError("random_forms: requested degree below all generator degrees");
    IdealPresentation out;
    out.numVars = I.numVars;
    out.field = I.field;
    out.seed = seed;
    for (size_t fi = 0; fi < degrees.d.size(); ++fi) {
        int dd = degrees.d[fi];
        for (int attempt = 0; attempt < 5; ++attempt) {
            // per-form stream so parallel callers and retries stay reproducible
            std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (fi + 1) +
                                0x100000001b3ULL * static_cast<uint64_t>(attempt));
            std::map<Exponents, Rat> acc;
            for (const auto& g : I.gens) {
                if (dd < g.degree) continue;
                std::vector<Exponents> mult;
                enumerate_monomials(I.numVars, dd - g.degree, mult);
                for (const auto& m : mult) {
                    Rat c;
                    if (I.field.rational) {
                        std::uniform_int_distribution<long> dist(-99, 99);
                        c = Rat(dist(rng));
                    } else {
                        std::uniform_int_distribution<uint64_t> dist(0, I.field.prime - 1);
                        c = Rat(static_cast<unsigned long>(dist(rng)));
                    }
                    if (c == 0) continue;
                    for (const auto& [e2, c2] : g.terms) {
                        Exponents e(m);
                        for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                        auto [it, fresh] = acc.emplace(e, c * c2);
                        if (!fresh) it->second += c * c2;
                    }
                }
            }
            IdealPresentation::Generator gen;
            gen.degree = dd;
            for (auto& [e, c] : acc) {
                Rat cc = c;
                if (!I.field.rational) {
                    uint64_t r = to_fp(c, I.field.prime);
                    cc = Rat(static_cast<unsigned long>(r));
                }
                if (cc != 0) gen.terms.emplace_back(e, cc);
            }
            if (!gen.terms.empty()) {
                out.gens.push_back(std::move(gen));
                break;
            }
            if (attempt == 4)
                throw ValidationError("random_forms: degenerate sample after 5 retries");
        }
    }
    return out;
}

std::pair<NumericalPolynomial, int> fit_hilbert_polynomial_detail(const HilbertFunctionTable& table,
                                                                  int dim) {
    if (dim < 0) throw ValidationError("fit: dim >= 0 required");
    long n = static_cast<long>(table.h.size());
    if (n < dim + 2) throw NotStabilizedError("fit: table shorter than dim+2 values");
    NumericalPolynomial poly;
    if (dim == 0) {
        poly = NumericalPolynomial(0, {Int(0)});
    } else {
        int m = dim - 1;
        long base = n - 1 - m;  // fit on the last dim+1 points
        std::vector<Int> diffs(table.h.end() - (m + 1), table.h.end());
        std::vector<Int> newton(static_cast<size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) {
            newton[static_cast<size_t>(k)] = diffs[0];
            for (size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
            diffs.pop_back();
        }
        // e_{m-a} = (-1)^{m-a} Delta^a Q(-1), Delta^a Q(t) = sum_k c_k C(t-base-a, k-a)
        std::vector<Int> e(static_cast<size_t>(m) + 1);
        for (int a = 0; a <= m; ++a) {
            Int v = 0;
            for (int k = a; k <= m; ++k)
                v += newton[static_cast<size_t>(k)] * binomial(Int(-1 - base - a), k - a);
            if ((m - a) % 2 != 0) v = -v;
            e[static_cast<size_t>(m - a)] = v;
        }
        poly = NumericalPolynomial(m, std::move(e));
    }
    for (long d = n - dim - 2; d < n; ++d)
        if (poly.eval(Int(d)) != table.h[static_cast<size_t>(d)])
            throw NotStabilizedError("fit: polynomial does not match the trailing dim+2 values");
    int first = static_cast<int>(n);
    for (long d = n - 1; d >= 0; --d) {
        if (poly.eval(Int(d)) == table.h[static_cast<size_t>(d)])
            first = static_cast<int>(d);
        else
            break;
    }
    return {poly, first};
}

NumericalPolynomial fit_hilbert_polynomial(const HilbertFunctionTable& table, int dim) {
    return fit_hilbert_polynomial_detail(table, dim).first;
}

RationalSeries table_to_series(const HilbertFunctionTable& table, int dim) {
    auto [poly, first] = fit_hilbert_polynomial_detail(table, dim);
    // S = sum_{d<first} h(d) t^d + sum_{d>=first} Q(d) t^d, with the tail via
    // sum_{d>=0} Q(d) t^d = sum_i (-1)^i e_i / (1-t)^{dim-i}
    RationalSeries s;
    LaurentPoly head;
    for (int d = 0; d < first; ++d) head.add_term(d, Rat(table.h[static_cast<size_t>(d)]));
    s = RationalSeries(head, 0);
    if (dim == 0) return s;
    const auto& e = poly.coeffs();
    for (int i = 0; i < dim; ++i) {
        Rat c(e[static_cast<size_t>(i)]);
        if (i % 2 != 0) c = -c;
        if (c == 0) continue;
        s = s + RationalSeries(LaurentPoly::constant(c), dim - i);
    }
    LaurentPoly qhead;
    for (int d = 0; d < first; ++d) qhead.add_term(d, Rat(poly.eval(Int(d))));
    s = s - RationalSeries(qhead, 0);
    return s;
}

std::vector<Rat> table_to_evec(const HilbertFunctionTable& table, int dim, int kmax) {
    return extended_coeffs(table_to_series(table, dim), dim, kmax);
}

namespace {

bool mono_divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && mono_divides(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

RationalSeries monomial_series_rec(std::vector<Exponents> gens, int numVars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return RationalSeries::geometric(numVars);
    bool pure_powers = true;
    for (const auto& g : gens) {
        long total = 0;
        int support = 0;
        for (int e : g) {
            total += e;
            if (e > 0) ++support;
        }
        if (total == 0) return RationalSeries::zero();  // unit in the ideal
        if (support > 1) pure_powers = false;
    }
    if (pure_powers) {
        // monomial complete intersection (x_{i_1}^{a_1}, ...)
        LaurentPoly num = LaurentPoly::constant(1);
        for (const auto& g : gens) {
            long a = 0;
            for (int e : g) a += e;
            num = num * (LaurentPoly::constant(1) - LaurentPoly::monomial(a));
        }
        return RationalSeries(num, numVars);
    }
    // split on the variable most frequent among mixed generators; both
    // branches then strictly simplify
    int var = -1;
    std::vector<int> count(static_cast<size_t>(numVars), 0);
    for (const auto& g : gens) {
        int support = 0;
        for (int e : g)
            if (e > 0) ++support;
        if (support < 2) continue;
        for (int i = 0; i < numVars; ++i)
            if (g[static_cast<size_t>(i)] > 0) ++count[static_cast<size_t>(i)];
    }
    for (int i = 0; i < numVars; ++i)
        if (var < 0 || count[static_cast<size_t>(i)] > count[static_cast<size_t>(var)]) var = i;

    std::vector<Exponents> colon;
    for (auto g : gens) {
        if (g[static_cast<size_t>(var)] > 0) --g[static_cast<size_t>(var)];
        colon.push_back(std::move(g));
    }
    std::vector<Exponents> plus;
    Exponents xvar(static_cast<size_t>(numVars), 0);
    xvar[static_cast<size_t>(var)] = 1;
    plus.push_back(xvar);
    for (const auto& g : gens)
        if (g[static_cast<size_t>(var)] == 0) plus.push_back(g);
    return monomial_series_rec(std::move(colon), numVars).shifted(1) +
           monomial_series_rec(std::move(plus), numVars);
}

}  // namespace

RationalSeries monomial_series(const std::vector<Exponents>& monomialGens, int numVars) {
    if (numVars < 1) throw ValidationError("monomial_series: numVars >= 1 required");
    for (const auto& g : monomialGens)
        if (static_cast<int>(g.size()) != numVars)
            throw ValidationError("monomial_series: exponent tuple length mismatch");
    return monomial_series_rec(monomialGens, numVars);
}

}  // namespace resint
