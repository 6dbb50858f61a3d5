#include "homlat/lattice.hpp"

#include <algorithm>

namespace homlat {

namespace {

// Integer solutions of d*(z + c)^2 <= budget, d > 0, as [lo, hi].
// The interval can be empty (no integer between -c - sqrt(t) and -c + sqrt(t)).
bool integer_range(const Rat& c, const Rat& d, const Rat& budget, Int& lo, Int& hi) {
    if (budget < 0) return false;
    Rat t = budget / d;
    // sqrt(t) = sqrt(num*den)/den, bracketed by s/den and (s+1)/den
    Int s = isqrt_floor(t.get_num() * t.get_den());
    Rat upper = make_rat(s + 1, t.get_den());
    lo = ceil_rat(-upper - c);
    while ((Rat(lo) + c) * (Rat(lo) + c) > t && Rat(lo) + c < 0) ++lo;
    hi = floor_rat(upper - c);
    while ((Rat(hi) + c) * (Rat(hi) + c) > t && Rat(hi) + c > 0) --hi;
    if (lo > hi) return false;
    if ((Rat(lo) + c) * (Rat(lo) + c) > t) return false;
    if ((Rat(hi) + c) * (Rat(hi) + c) > t) return false;
    return true;
}

struct EnumVisitor {
    virtual ~EnumVisitor() = default;
    virtual const Rat& bound() const = 0;
    virtual void visit(const IntVec& w, const Rat& q) = 0;
};

// All integer w with q(w + t) <= bound, q given by the LDL^T data.
// Levels run from n-1 down to 0; rho carries the settled contribution.
void enumerate_level(const Ldl& ldl, const RatVec& t, std::size_t k, RatVec& y, IntVec& w,
                     const Rat& rho, EnumVisitor& vis) {
    Rat c = t[k];
    for (std::size_t i = k + 1; i < ldl.n; ++i)
        if (ldl.lower(i, k) != 0) c += ldl.lower(i, k) * y[i];
    Int lo, hi;
    if (!integer_range(c, ldl.pivots[k], vis.bound() - rho, lo, hi)) return;
    for (Int z = lo; z <= hi; ++z) {
        Rat off = Rat(z) + c;
        Rat total = rho + ldl.pivots[k] * off * off;
        if (total > vis.bound()) continue;  // bound may have shrunk mid-loop
        w[k] = z;
        y[k] = Rat(z) + t[k];
        if (k == 0)
            vis.visit(w, total);
        else
            enumerate_level(ldl, t, k - 1, y, w, total, vis);
    }
}

void enumerate_all(const Ldl& ldl, const RatVec& t, EnumVisitor& vis) {
    if (ldl.n == 0) return;
    RatVec y(ldl.n, Rat(0));
    IntVec w(ldl.n, Int(0));
    enumerate_level(ldl, t, ldl.n - 1, y, w, Rat(0), vis);
}

// Keeps every minimizer; the pruning bound shrinks as better vectors appear.
struct MinCollector final : EnumVisitor {
    Rat current_bound;
    const RatVec* shift = nullptr;  // exclude w with w + shift == 0 (the zero point)
    bool found = false;
    Rat best;
    std::vector<IntVec> minimizers;

    const Rat& bound() const override { return current_bound; }

    void visit(const IntVec& w, const Rat& q) override {
        if (shift) {
            bool zero = true;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (Rat(w[i]) + (*shift)[i] != 0) {
                    zero = false;
                    break;
                }
            if (zero) return;
        }
        if (!found || q < best) {
            found = true;
            best = q;
            current_bound = q;
            minimizers.clear();
            minimizers.push_back(w);
        } else if (q == best) {
            minimizers.push_back(w);
        }
    }
};

struct AllCollector final : EnumVisitor {
    Rat fixed_bound;
    std::vector<IntVec> vectors;

    const Rat& bound() const override { return fixed_bound; }

    void visit(const IntVec& w, const Rat&) override {
        for (const Int& z : w)
            if (z != 0) {
                vectors.push_back(w);
                return;
            }
    }
};

struct Gso {
    RatVec b;   // squared Gram-Schmidt norms
    RatMat mu;  // mu(i, j) for j < i
};

Gso compute_gso(const IntMat& g) {
    const std::size_t n = g.rows();
    Gso out;
    out.b.assign(n, Rat(0));
    out.mu = RatMat(n, n);
    RatMat r(n, n);  // r(i, j) = <b_i, b*_j>
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Rat val(g(i, j));
            for (std::size_t l = 0; l < j; ++l) val -= out.mu(j, l) * r(i, l);
            r(i, j) = val;
            if (j < i) out.mu(i, j) = val / out.b[j];
        }
        out.b[i] = r(i, i);
        if (out.b[i] <= 0)
            throw compute_error("NotPositiveDefinite", "Gram-Schmidt met a nonpositive squared norm");
    }
    return out;
}

// Column operation b_k <- b_k - r * b_j on the Gram matrix and transform.
void column_op(IntMat& g, IntMat& u, std::size_t k, std::size_t j, const Int& r) {
    const std::size_t n = g.rows();
    Int gkk = g(k, k) - 2 * r * g(k, j) + r * r * g(j, j);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        g(i, k) -= r * g(i, j);
        g(k, i) = g(i, k);
    }
    g(k, k) = gkk;
    for (std::size_t i = 0; i < n; ++i) u(i, k) -= r * u(i, j);
}

void column_swap(IntMat& g, IntMat& u, std::size_t k, std::size_t j) {
    const std::size_t n = g.rows();
    for (std::size_t i = 0; i < n; ++i) std::swap(u(i, k), u(i, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(g(i, k), g(i, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(g(k, i), g(j, i));
}

IntVec apply_transform(const IntMat& u, const IntVec& w) { return mat_vec(u, w); }

struct EnumSetup {
    LllResult lll;
    Ldl ldl;
};

EnumSetup prepare(const GramLattice& lattice) {
    EnumSetup s{lll_reduce(lattice), {}};
    if (!ldl_decompose(to_rat_mat(s.lll.reduced.gram()), s.ldl))
        throw compute_error("NotPositiveDefinite", "reduced Gram matrix is not positive definite");
    return s;
}

// Witness rule shared by all exact minimizers: prefer vectors whose first
// nonzero coordinate is positive, then take the lexicographically smallest.
IntVec select_witness(std::vector<IntVec> candidates) {
    std::vector<IntVec> positive;
    for (const IntVec& v : candidates) {
        for (const Int& z : v) {
            if (z > 0) {
                positive.push_back(v);
                break;
            }
            if (z < 0) break;
        }
    }
    std::vector<IntVec>& pool = positive.empty() ? candidates : positive;
    IntVec best = pool.front();
    for (std::size_t i = 1; i < pool.size(); ++i)
        if (lex_less(pool[i], best)) best = pool[i];
    return best;
}

enum class ScanSkip { Zero, Point, Nothing };

template <class T>
struct ScanState {
    std::size_t n;
    Mat<T> g;
    std::vector<T> linear;  // l_j, adds 2 * l . w to the form
    T constant;
    T box;
    ScanSkip skip = ScanSkip::Zero;  // Zero: plain SVP; Point: the coset's zero point
    std::vector<T> exclude_w;
    bool found = false;
    T best;
    std::vector<std::vector<T>> minimizers;
};

template <class T>
void scan_level(ScanState<T>& st, std::size_t k, std::vector<T>& w, std::vector<T>& sums, const T& partial) {
    // sums[j] = sum_{i<k} w_i * g(i, j); partial = quadratic value of the prefix
    if (k + 1 == st.n) {
        const T a = st.g(k, k);
        const T b = 2 * (sums[k] + st.linear[k]);
        for (T z = -st.box; z <= st.box; ++z) {
            T total = partial + a * z * z + b * z;
            if (st.skip == ScanSkip::Point) {
                bool same = true;
                for (std::size_t i = 0; i + 1 < st.n && same; ++i) same = w[i] == st.exclude_w[i];
                if (same && z == st.exclude_w.back()) continue;
            } else if (st.skip == ScanSkip::Zero) {
                bool zero = z == 0;
                for (std::size_t i = 0; i + 1 < st.n && zero; ++i) zero = w[i] == 0;
                if (zero) continue;
            }
            if (!st.found || total < st.best) {
                st.found = true;
                st.best = total;
                st.minimizers.clear();
                w[k] = z;
                st.minimizers.push_back(w);
            } else if (total == st.best) {
                w[k] = z;
                st.minimizers.push_back(w);
            }
        }
        return;
    }
    for (T z = -st.box; z <= st.box; ++z) {
        w[k] = z;
        T next = partial + st.g(k, k) * z * z + 2 * z * (sums[k] + st.linear[k]);
        std::vector<T> next_sums = sums;
        for (std::size_t j = k + 1; j < st.n; ++j) next_sums[j] += z * st.g(k, j);
        scan_level(st, k + 1, w, next_sums, next);
    }
}

template <class T>
void run_scan(ScanState<T>& st) {
    std::vector<T> w(st.n, T(0));
    std::vector<T> sums(st.n, T(0));
    if (st.n == 0) return;
    scan_level(st, 0, w, sums, st.constant);
}

bool fits_int64_scan(const IntMat& g, const IntVec& linear, const Int& constant, const Int& box,
                     const IntVec* exclude) {
    Int max_entry = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) max_entry = std::max(max_entry, Int(abs(g(i, j))));
    for (const Int& l : linear) max_entry = std::max(max_entry, Int(abs(l)));
    max_entry = std::max(max_entry, Int(abs(constant)));
    if (exclude)
        for (const Int& z : *exclude) max_entry = std::max(max_entry, Int(abs(z)));
    Int n(static_cast<unsigned long>(g.rows()));
    Int worst = 8 * (n * n + n + 1) * max_entry * (box + 1) * (box + 1);
    return worst.fits_slong_p() && box.fits_slong_p();
}

struct ScanOutcome {
    Int best;
    std::vector<IntVec> minimizers;  // coefficient vectors w
};

ScanOutcome scan_minimizers(const IntMat& g, const IntVec& linear, const Int& constant, const Int& box,
                            ScanSkip skip, const IntVec* exclude) {
    if (fits_int64_scan(g, linear, constant, box, exclude)) {
        ScanState<long long> st;
        st.n = g.rows();
        st.g = Mat<long long>(st.n, st.n);
        for (std::size_t i = 0; i < st.n; ++i)
            for (std::size_t j = 0; j < st.n; ++j) st.g(i, j) = g(i, j).get_si();
        st.linear.resize(st.n);
        for (std::size_t i = 0; i < st.n; ++i) st.linear[i] = linear[i].get_si();
        st.constant = constant.get_si();
        st.box = box.get_si();
        st.skip = skip;
        if (skip == ScanSkip::Point) {
            st.exclude_w.resize(st.n);
            for (std::size_t i = 0; i < st.n; ++i) st.exclude_w[i] = (*exclude)[i].get_si();
        }
        run_scan(st);
        ScanOutcome out;
        out.best = Int(static_cast<long>(st.best));
        out.minimizers.reserve(st.minimizers.size());
        for (const auto& v : st.minimizers) {
            IntVec iv(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) iv[i] = Int(static_cast<long>(v[i]));
            out.minimizers.push_back(std::move(iv));
        }
        return out;
    }
    ScanState<Int> st;
    st.n = g.rows();
    st.g = g;
    st.linear = linear;
    st.constant = constant;
    st.box = box;
    st.skip = skip;
    if (skip == ScanSkip::Point) st.exclude_w = *exclude;
    run_scan(st);
    return {st.best, std::move(st.minimizers)};
}

SvpResult pick_witness(std::vector<IntVec> candidates, const Int& best) {
    std::sort(candidates.begin(), candidates.end(), lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return {select_witness(std::move(candidates)), best};
}

}  // namespace

IntVec normalize_sign(IntVec z) {
    for (const Int& x : z) {
        if (x > 0) return z;
        if (x < 0) {
            for (Int& y : z) y = -y;
            return z;
        }
    }
    return z;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

GramLattice::GramLattice(IntMat gram) : gram_(std::move(gram)) {
    if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
        throw invariant_error("InvalidDimension", "Gram matrix must be square of positive dimension");
    if (gram_.rows() > max_dim)
        throw invariant_error("DimensionTooLarge",
                              "dimension " + std::to_string(gram_.rows()) + " exceeds the supported 16");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram_(i, j) != gram_(j, i))
                throw invariant_error("NotSymmetric", "Gram matrix is not symmetric");
    Ldl ldl;
    if (!ldl_decompose(to_rat_mat(gram_), ldl))
        throw compute_error("NotPositiveDefinite", "Gram matrix is not positive definite");
}

Int GramLattice::q(const IntVec& z) const {
    if (z.size() != dim()) throw invariant_error("DimensionMismatch", "vector length does not match lattice");
    return bilinear_form(gram_, z, z);
}

LllResult lll_reduce(const GramLattice& lattice) {
    const std::size_t n = lattice.dim();
    IntMat g = lattice.gram();
    IntMat u = IntMat::identity(n);
    if (n > 1) {
        const Rat delta(3, 4);
        Gso gso = compute_gso(g);
        std::size_t k = 1;
        while (k < n) {
            for (std::size_t jj = k; jj-- > 0;) {
                Int r = round_half_up(gso.mu(k, jj));
                if (r != 0) {
                    column_op(g, u, k, jj, r);
                    for (std::size_t l = 0; l < jj; ++l) gso.mu(k, l) -= Rat(r) * gso.mu(jj, l);
                    gso.mu(k, jj) -= Rat(r);
                }
            }
            Rat lhs = gso.b[k];
            Rat rhs = (delta - gso.mu(k, k - 1) * gso.mu(k, k - 1)) * gso.b[k - 1];
            if (lhs >= rhs) {
                ++k;
            } else {
                column_swap(g, u, k, k - 1);
                gso = compute_gso(g);
                k = k > 1 ? k - 1 : 1;
            }
        }
    }
    return {GramLattice(std::move(g)), std::move(u)};
}

SvpResult shortest_vector(const GramLattice& lattice) {
    EnumSetup s = prepare(lattice);
    const IntMat& g = s.lll.reduced.gram();
    const std::size_t n = lattice.dim();
    MinCollector vis;
    vis.current_bound = Rat(g(0, 0));
    for (std::size_t i = 1; i < n; ++i) vis.current_bound = std::min(vis.current_bound, Rat(g(i, i)));
    RatVec t(n, Rat(0));
    vis.shift = &t;
    enumerate_all(s.ldl, t, vis);
    std::vector<IntVec> mins;
    mins.reserve(vis.minimizers.size());
    for (const IntVec& w : vis.minimizers) mins.push_back(normalize_sign(apply_transform(s.lll.transform, w)));
    std::sort(mins.begin(), mins.end(), lex_less);
    mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
    IntVec witness = select_witness(std::move(mins));
    return {witness, lattice.q(witness)};
}

namespace {

struct MinimaData {
    Int lambda_sq;
    Int Lambda_sq;
    IntVec lambda_witness;
    IntVec Lambda_witness;
};

// Sorted below-bound enumeration plus greedy extraction of n independent
// vectors; the k-th greedy pick realizes the k-th successive minimum.
MinimaData successive_minima(const GramLattice& lattice) {
    EnumSetup s = prepare(lattice);
    const IntMat& g = s.lll.reduced.gram();
    const std::size_t n = lattice.dim();
    AllCollector vis;
    vis.fixed_bound = Rat(g(0, 0));
    for (std::size_t i = 1; i < n; ++i) vis.fixed_bound = std::max(vis.fixed_bound, Rat(g(i, i)));
    RatVec t(n, Rat(0));
    enumerate_all(s.ldl, t, vis);

    std::vector<std::pair<Int, IntVec>> items;
    items.reserve(vis.vectors.size());
    for (const IntVec& w : vis.vectors) {
        IntVec z = normalize_sign(apply_transform(s.lll.transform, w));
        items.emplace_back(bilinear_form(g, w, w), std::move(z));
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return lex_less(a.second, b.second);
    });
    items.erase(std::unique(items.begin(), items.end(),
                            [](const auto& a, const auto& b) { return a.second == b.second; }),
                items.end());

    // greedy rank tracking over Q
    std::vector<RatVec> echelon;
    std::vector<std::size_t> pivots;
    auto try_add = [&](const IntVec& z) {
        RatVec v(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) v[i] = Rat(z[i]);
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            Rat f = v[pivots[r]];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * echelon[r][j];
        }
        std::size_t piv = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                piv = j;
                break;
            }
        if (piv == v.size()) return false;
        Rat inv = Rat(1) / v[piv];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] *= inv;
        echelon.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    };

    MinimaData out;
    std::size_t picked = 0;
    for (const auto& [qv, z] : items) {
        if (!try_add(z)) continue;
        ++picked;
        if (picked == 1) {
            out.lambda_sq = qv;
            out.lambda_witness = z;
        }
        if (picked == n) {
            out.Lambda_sq = qv;
            out.Lambda_witness = z;
            break;
        }
    }
    if (picked < n)
        throw compute_error("EnumerationIncomplete", "successive minima enumeration missed a basis");
    return out;
}

}  // namespace

Int successive_minimum_n(const GramLattice& lattice) { return successive_minima(lattice).Lambda_sq; }

LatticeReport lattice_report(const GramLattice& lattice) {
    MinimaData m = successive_minima(lattice);
    LatticeReport report;
    report.lambda_sq = m.lambda_sq;
    report.Lambda_sq = m.Lambda_sq;
    report.covering_radius_sq_upper =
        make_rat(Int(static_cast<unsigned long>(lattice.dim())) * m.Lambda_sq, 4);
    report.covolume_sq = covolume_sq(lattice);
    report.lambda_witness = m.lambda_witness;
    report.Lambda_witness = m.Lambda_witness;
    return report;
}

std::optional<SvpResult> coset_minimum(const GramLattice& lattice, const IntMat& h_basis,
                                       const IntVec& offset) {
    const std::size_t n = lattice.dim();
    if (h_basis.rows() != n || h_basis.cols() != n || offset.size() != n)
        throw invariant_error("DimensionMismatch", "coset data does not match the lattice dimension");
    if (det_bareiss(h_basis) == 0)
        throw compute_error("SingularSubgroupBasis", "subgroup basis is singular");

    IntMat gh = mat_mul(transpose(h_basis), mat_mul(lattice.gram(), h_basis));
    GramLattice sub(gh);
    LllResult lll = lll_reduce(sub);
    IntMat basis_eff = mat_mul(h_basis, lll.transform);  // u = offset + basis_eff * w

    RatVec off_rat(n);
    for (std::size_t i = 0; i < n; ++i) off_rat[i] = Rat(offset[i]);
    RatVec shift;
    if (!solve_rat(to_rat_mat(basis_eff), off_rat, shift))
        throw compute_error("SingularSubgroupBasis", "subgroup basis is singular");

    Ldl ldl;
    if (!ldl_decompose(to_rat_mat(lll.reduced.gram()), ldl))
        throw compute_error("NotPositiveDefinite", "coset Gram matrix is not positive definite");

    // starting bound from explicit coset points w in {0, +-e_i}
    MinCollector vis;
    vis.shift = &shift;
    bool have_bound = false;
    auto consider = [&](const IntVec& w) {
        IntVec u = offset;
        IntVec hw = mat_vec(basis_eff, w);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            u[i] += hw[i];
            if (u[i] != 0) zero = false;
        }
        if (zero) return;
        Rat qv(bilinear_form(lattice.gram(), u, u));
        if (!have_bound || qv < vis.current_bound) {
            vis.current_bound = qv;
            have_bound = true;
        }
    };
    IntVec w0(n, Int(0));
    consider(w0);
    for (std::size_t i = 0; i < n; ++i) {
        IntVec w = w0;
        w[i] = 1;
        consider(w);
        w[i] = -1;
        consider(w);
    }
    if (!have_bound) return std::nullopt;  // cannot happen for nonsingular H

    enumerate_all(ldl, shift, vis);
    std::vector<IntVec> candidates;
    candidates.reserve(vis.minimizers.size());
    for (const IntVec& w : vis.minimizers) {
        IntVec u = offset;
        IntVec hw = mat_vec(basis_eff, w);
        for (std::size_t i = 0; i < n; ++i) u[i] += hw[i];
        candidates.push_back(std::move(u));
    }
    if (candidates.empty()) return std::nullopt;
    std::sort(candidates.begin(), candidates.end(), lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    IntVec witness = select_witness(std::move(candidates));
    return SvpResult{witness, lattice.q(witness)};
}

Int covolume_sq(const GramLattice& lattice) { return det_bareiss(lattice.gram()); }

SvpResult brute_force_minimum(const GramLattice& lattice, const Int& box_bound) {
    if (lattice.dim() > 8)
        throw invariant_error("DimensionTooLarge", "brute force is limited to dimension 8");
    if (box_bound < 1) throw invariant_error("InvalidBox", "box bound must be positive");
    IntVec zero_linear(lattice.dim(), Int(0));
    ScanOutcome out = scan_minimizers(lattice.gram(), zero_linear, Int(0), box_bound, ScanSkip::Zero, nullptr);
    for (IntVec& v : out.minimizers) v = normalize_sign(std::move(v));
    return pick_witness(std::move(out.minimizers), out.best);
}

SvpResult coset_brute_force(const GramLattice& lattice, const IntMat& h_basis, const IntVec& offset,
                            const Int& box_bound) {
    const std::size_t n = lattice.dim();
    if (n > 8) throw invariant_error("DimensionTooLarge", "brute force is limited to dimension 8");
    if (h_basis.rows() != n || h_basis.cols() != n || offset.size() != n)
        throw invariant_error("DimensionMismatch", "coset data does not match the lattice dimension");
    if (det_bareiss(h_basis) == 0)
        throw compute_error("SingularSubgroupBasis", "subgroup basis is singular");
    // q(offset + H w) = w^T (H^T G H) w + 2 (H^T G offset) . w + q(offset)
    IntMat gh = mat_mul(transpose(h_basis), mat_mul(lattice.gram(), h_basis));
    IntVec g_off = mat_vec(lattice.gram(), offset);
    IntVec linear = mat_vec(transpose(h_basis), g_off);
    Int constant = bilinear_form(lattice.gram(), offset, offset);

    // the w giving u = 0 must be skipped when it is integral and inside the box
    RatVec off_rat(n), w_zero;
    for (std::size_t i = 0; i < n; ++i) off_rat[i] = Rat(-offset[i]);
    IntVec exclude;
    ScanSkip skip = ScanSkip::Nothing;
    if (solve_rat(to_rat_mat(h_basis), off_rat, w_zero)) {
        bool integral = true;
        for (const Rat& x : w_zero) integral = integral && is_integral(x);
        if (integral) {
            exclude.resize(n);
            for (std::size_t i = 0; i < n; ++i) exclude[i] = w_zero[i].get_num();
            bool inside = true;
            for (const Int& x : exclude) inside = inside && abs(x) <= box_bound;
            if (inside) skip = ScanSkip::Point;
        }
    }
    ScanOutcome out = scan_minimizers(gh, linear, constant, box_bound, skip,
                                      skip == ScanSkip::Point ? &exclude : nullptr);
    std::vector<IntVec> us;
    us.reserve(out.minimizers.size());
    for (const IntVec& w : out.minimizers) {
        IntVec u = offset;
        IntVec hw = mat_vec(h_basis, w);
        for (std::size_t i = 0; i < n; ++i) u[i] += hw[i];
        us.push_back(std::move(u));
    }
    SvpResult result = pick_witness(std::move(us), out.best);
    result.q_value = lattice.q(result.coords);
    return result;
}

Int sound_enumeration_box(const GramLattice& lattice) {
    const std::size_t n = lattice.dim();
    Int c = lattice.gram()(0, 0);
    for (std::size_t i = 1; i < n; ++i) c = std::min(c, lattice.gram()(i, i));
    RatMat inv;
    if (!invert_rat(to_rat_mat(lattice.gram()), inv))
        throw compute_error("NotPositiveDefinite", "Gram matrix is singular");
    Int box = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Rat r = Rat(c) * inv(k, k);
        Int m = isqrt_floor(ceil_rat(r));
        while (Rat(m) * Rat(m) < r) ++m;
        box = std::max(box, m);
    }
    return box;
}

Int sound_coset_box(const GramLattice& lattice, const IntMat& h_basis, const IntVec& offset) {
    const std::size_t n = lattice.dim();
    if (h_basis.rows() != n || h_basis.cols() != n || offset.size() != n)
        throw invariant_error("DimensionMismatch", "coset data does not match the lattice dimension");
    if (det_bareiss(h_basis) == 0)
        throw compute_error("SingularSubgroupBasis", "subgroup basis is singular");
    IntMat gh = mat_mul(transpose(h_basis), mat_mul(lattice.gram(), h_basis));

    // explicit starting bound from w in {0, +-e_i}
    Int c;
    bool have = false;
    auto consider = [&](const IntVec& w) {
        IntVec u = offset;
        IntVec hw = mat_vec(h_basis, w);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            u[i] += hw[i];
            if (u[i] != 0) zero = false;
        }
        if (zero) return;
        Int qv = bilinear_form(lattice.gram(), u, u);
        if (!have || qv < c) {
            c = qv;
            have = true;
        }
    };
    IntVec w0(n, Int(0));
    consider(w0);
    for (std::size_t i = 0; i < n; ++i) {
        IntVec w = w0;
        w[i] = 1;
        consider(w);
        w[i] = -1;
        consider(w);
    }

    RatVec off_rat(n), t;
    for (std::size_t i = 0; i < n; ++i) off_rat[i] = Rat(offset[i]);
    if (!solve_rat(to_rat_mat(h_basis), off_rat, t))
        throw compute_error("SingularSubgroupBasis", "subgroup basis is singular");
    RatMat inv;
    if (!invert_rat(to_rat_mat(gh), inv))
        throw compute_error("NotPositiveDefinite", "coset Gram matrix is singular");
    Int box = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Rat r = Rat(c) * inv(k, k);
        Int m = isqrt_floor(ceil_rat(r));
        while (Rat(m) * Rat(m) < r) ++m;
        Rat shifted = Rat(m) + abs(t[k]);
        box = std::max(box, ceil_rat(shifted));
    }
    return box;
}

}  // namespace homlat
