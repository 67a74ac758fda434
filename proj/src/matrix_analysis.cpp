#include "derange/matrix_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <thread>

namespace derange {

PairColumns::PairColumns(int q) : q_(q) {
    const int n = q + 1;
    index_.assign(n * n, -1);
    pairs_.reserve(n * n);
    for (int p = 0; p < n; ++p) {
        pairs_.emplace_back(p, p);
        index_[p * n + p] = p;
    }
    for (int p1 = 0; p1 < n; ++p1)
        for (int p2 = 0; p2 < n; ++p2) {
            if (p1 == p2) continue;
            index_[p1 * n + p2] = static_cast<int>(pairs_.size());
            pairs_.emplace_back(p1, p2);
        }
}

IncidenceSystem build_incidence(const PglGroup& group) {
    const int q = group.q();
    const int n = group.size();
    IncidenceSystem sys{&group, PairColumns(q), IntMatrix(n, (q + 1) * (q + 1)), {}, {}, 0};

    sys.row_to_element.reserve(n);
    sys.row_to_element.push_back(group.identity());
    for (int d : group.derangements()) sys.row_to_element.push_back(d);
    sys.n_derangements = static_cast<int>(group.derangements().size());
    for (int g = 0; g < n; ++g)
        if (g != group.identity() && group.fixed_points(g) != 0) sys.row_to_element.push_back(g);

    sys.element_to_row.assign(n, -1);
    for (int r = 0; r < n; ++r) sys.element_to_row[sys.row_to_element[r]] = r;

    for (int r = 0; r < n; ++r) {
        int g = sys.row_to_element[r];
        for (int p = 0; p <= q; ++p) sys.a.at(r, sys.cols.index(p, group.apply(g, p))) = 1;
    }
    return sys;
}

IntMatrix IncidenceSystem::derangement_block() const {
    IntMatrix m(n_derangements, cols.n_distinct());
    for (int r = 0; r < n_derangements; ++r)
        for (int c = 0; c < cols.n_distinct(); ++c) m.at(r, c) = a.at(1 + r, cols.n_diag() + c);
    return m;
}

bool gram_closed_form_check(const IncidenceSystem& sys, std::string* why) {
    const long long q = sys.cols.q();
    const long long order = sys.a.rows();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };

    IntMatrix g = sys.a.gram();
    for (int i = 0; i < g.rows(); ++i) {
        auto [p1, q1] = sys.cols.pair(i);
        for (int j = 0; j < g.cols(); ++j) {
            auto [p2, q2] = sys.cols.pair(j);
            long long expect;
            if (p1 == p2 && q1 == q2)
                expect = q * (q - 1);
            else if (p1 != p2 && q1 != q2)
                expect = q - 1;
            else
                expect = 0;
            if (g.at(i, j) != expect)
                return fail("gram entry mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }

    // exact spectral content of the closed form: eigenvalues |G|, q^2-1, 0
    // with multiplicities 1, q^2, 2q
    const long long ev1 = order, ev2 = q * q - 1;
    IntMatrix shifted1 = g, shifted2 = g;
    for (int i = 0; i < g.rows(); ++i) {
        shifted1.at(i, i) -= ev2;
        shifted2.at(i, i) -= ev1;
    }
    if (!g.times(shifted1).times(shifted2).is_zero()) return fail("annihilating polynomial is nonzero");
    long long tr = 0, tr2 = 0;
    IntMatrix g2 = g.times(g);
    for (int i = 0; i < g.rows(); ++i) {
        tr += g.at(i, i);
        tr2 += g2.at(i, i);
    }
    if (tr != ev1 + ev2 * (q * q)) return fail("trace forces different multiplicities");
    if (tr2 != ev1 * ev1 + ev2 * ev2 * (q * q)) return fail("squared trace forces different multiplicities");
    // remaining multiplicity 2q falls on eigenvalue 0: (q+1)^2 - 1 - q^2 = 2q
    return true;
}

bool kernel_check(const IncidenceSystem& sys, std::string* why) {
    const int q = sys.cols.q();
    const int n_pts = q + 1;
    const int cols = sys.cols.n_cols();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };

    // difference vectors against base point 0, for each coordinate slot
    std::vector<std::vector<long long>> span;
    for (int slot = 0; slot < 2; ++slot) {
        for (int p = 1; p < n_pts; ++p) {
            std::vector<long long> v(cols, 0);
            for (int x = 0; x < n_pts; ++x) {
                if (slot == 0) {
                    v[sys.cols.index(p, x)] += 1;
                    v[sys.cols.index(0, x)] -= 1;
                } else {
                    v[sys.cols.index(x, p)] += 1;
                    v[sys.cols.index(x, 0)] -= 1;
                }
            }
            span.push_back(std::move(v));
        }
    }

    for (std::size_t i = 0; i < span.size(); ++i) {
        for (int r = 0; r < sys.a.rows(); ++r) {
            long long acc = 0;
            for (int c = 0; c < cols; ++c) acc += sys.a.at(r, c) * span[i][c];
            if (acc) return fail("kernel vector " + std::to_string(i) + " fails at row " + std::to_string(r));
        }
    }

    IntMatrix stack(static_cast<int>(span.size()), cols);
    for (std::size_t i = 0; i < span.size(); ++i)
        for (int c = 0; c < cols; ++c) stack.at(static_cast<int>(i), c) = span[i][c];
    if (rank_exact(stack) != 2 * q) return fail("kernel vectors do not span dimension 2q");

    // the two slot families are orthogonal
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            long long dot = 0;
            for (int c = 0; c < cols; ++c) dot += span[i][c] * span[q + j][c];
            if (dot) return fail("slot families are not orthogonal");
        }
    return true;
}

IntMatrix build_gram_n(const IncidenceSystem& sys) { return sys.derangement_block().gram(); }

CrossRatioFormulaReport cross_ratio_formula_check(const IncidenceSystem& sys, const IntMatrix& n,
                                                  int threads) {
    const auto& group = *sys.group;
    const long long q = sys.cols.q();
    const bool even = q % 2 == 0;
    const int dim = sys.cols.n_distinct();

    CrossRatioFormulaReport rep;
    std::vector<long long> mismatches(std::max(threads, 1), 0);
    std::vector<std::string> firsts(std::max(threads, 1));

    auto run_rows = [&](int tid, int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            auto [alpha, beta] = sys.cols.pair(sys.cols.n_diag() + i);
            for (int j = 0; j < dim; ++j) {
                auto [gamma, delta] = sys.cols.pair(sys.cols.n_diag() + j);
                long long expect;
                if (alpha == gamma && beta == delta)
                    expect = q * (q - 1) / 2;
                else if (alpha == gamma || beta == delta)
                    expect = 0;
                else if (even)
                    expect = (alpha == delta && beta == gamma) ? 0 : q / 2;
                else {
                    int crr = group.cross_ratio(alpha, delta, gamma, beta);
                    expect = group.field().is_square(crr) ? (q - 1) / 2 : (q + 1) / 2;
                }
                if (n.at(i, j) != expect) {
                    if (!mismatches[tid])
                        firsts[tid] = "entry ((" + std::to_string(alpha) + "," + std::to_string(beta) +
                                      "),(" + std::to_string(gamma) + "," + std::to_string(delta) +
                                      ")): count " + std::to_string(n.at(i, j)) + " formula " +
                                      std::to_string(expect);
                    ++mismatches[tid];
                }
            }
        }
    };

    if (threads <= 1) {
        run_rows(0, 0, dim);
    } else {
        std::vector<std::thread> pool;
        int chunk = (dim + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int lo = t * chunk, hi = std::min(dim, lo + chunk);
            if (lo < hi) pool.emplace_back(run_rows, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    rep.checked = static_cast<long long>(dim) * dim;
    for (auto m : mismatches) rep.mismatches += m;
    for (auto& f : firsts)
        if (!f.empty()) {
            rep.first_mismatch = f;
            break;
        }
    rep.pass = rep.mismatches == 0;
    return rep;
}

EigvecReport eigenvector_positivity(const CharacterTable& table, const IncidenceSystem& sys,
                                    const IntMatrix& n, double tol) {
    const auto& group = *sys.group;
    const int q = group.q();
    const int inf = q;
    const int dim = sys.cols.n_distinct();

    EigvecReport rep;
    rep.pass = true;

    for (int chi = 0; chi < table.n_characters(); ++chi) {
        auto kind = table.character(chi).kind;
        bool wanted = kind == CharKind::Lambda1 || kind == CharKind::PsiMinus1 ||
                      kind == CharKind::Eta || kind == CharKind::Nu;
        if (!wanted) continue;

        std::vector<std::complex<double>> v(dim, 0.0);
        for (int g = 0; g < group.size(); ++g) {
            int idx = sys.cols.distinct_index(group.apply(g, 0), group.apply(g, inf));
            v[idx] += table.value(chi, table.class_of_element(group.inverse(g)));
        }

        std::vector<std::complex<double>> nv(dim, 0.0);
        for (int i = 0; i < dim; ++i) {
            std::complex<double> acc = 0.0;
            for (int j = 0; j < dim; ++j)
                if (n.at(i, j)) acc += static_cast<double>(n.at(i, j)) * v[j];
            nv[i] = acc;
        }

        EigvecResult res;
        res.character = table.character(chi).name;
        const int base = sys.cols.distinct_index(0, inf);
        std::complex<double> s = nv[base] / static_cast<double>(q - 1);
        res.s_value = s.real();

        double scale = 0.0;
        for (int i = 0; i < dim; ++i) scale = std::max(scale, std::abs(nv[i]));
        scale = std::max(scale, 1.0);
        double worst = 0.0;
        for (int i = 0; i < dim; ++i) worst = std::max(worst, std::abs(nv[i] - s * v[i]));
        res.eigen_ok = worst <= tol * scale && std::abs(s.imag()) <= tol &&
                       std::abs(v[base] - std::complex<double>(q - 1)) <= tol;
        res.positive = res.s_value > 0;

        res.snap_ok = true;
        const long long Q = q;
        if (kind == CharKind::Lambda1) {
            mpq_class snapped = snap_half_integer(res.s_value, tol);
            res.snap_ok = snapped == mpq_from(Q * (Q * Q - 1), 2);
            res.snapped = rational_string(snapped);
        } else if (q % 2 == 0 && (kind == CharKind::Eta || kind == CharKind::Nu)) {
            mpq_class snapped = snap_half_integer(res.s_value, tol);
            long long expect = kind == CharKind::Eta ? Q * (Q + 1) / 2 : Q * (Q - 1) / 2;
            res.snap_ok = snapped == mpq_from(expect);
            res.snapped = rational_string(snapped);
        }

        rep.pass = rep.pass && res.eigen_ok && res.positive && res.snap_ok;
        rep.entries.push_back(std::move(res));
    }
    return rep;
}

ReducedSystem build_reduced(const IncidenceSystem& sys) {
    const int q = sys.cols.q();
    const int inf = q;
    ReducedSystem red;
    for (int c = 0; c < sys.cols.n_cols(); ++c) {
        auto [p1, p2] = sys.cols.pair(c);
        bool deleted = (p1 == inf) != (p2 == inf);  // (inf, t) or (t, inf), t finite
        (deleted ? red.deleted_cols : red.kept_cols).push_back(c);
    }

    red.abar = IntMatrix(sys.a.rows(), static_cast<int>(red.kept_cols.size()));
    for (int r = 0; r < sys.a.rows(); ++r)
        for (std::size_t c = 0; c < red.kept_cols.size(); ++c)
            red.abar.at(r, static_cast<int>(c)) = sys.a.at(r, red.kept_cols[c]);

    // mbar: derangement rows, kept distinct columns
    std::vector<int> kept_distinct;
    for (std::size_t c = 0; c < red.kept_cols.size(); ++c)
        if (red.kept_cols[c] >= sys.cols.n_diag()) kept_distinct.push_back(static_cast<int>(c));
    red.mbar = IntMatrix(sys.n_derangements, static_cast<int>(kept_distinct.size()));
    for (int r = 0; r < sys.n_derangements; ++r)
        for (std::size_t c = 0; c < kept_distinct.size(); ++c)
            red.mbar.at(r, static_cast<int>(c)) = red.abar.at(1 + r, kept_distinct[c]);
    return red;
}

ReducedRankReport reduced_rank_check(const IncidenceSystem& sys, const ReducedSystem& red) {
    const int q = sys.cols.q();
    ReducedRankReport rep{};
    rep.rank_abar = rank_via_gram(red.abar);
    rep.rank_mbar = rank_via_gram(red.mbar);
    rep.ranks_ok = rep.rank_abar == q * q + 1 && rep.rank_mbar == red.mbar.cols() &&
                   red.abar.cols() == q * q + 1 && red.mbar.cols() == q * (q - 1);

    // (q-1) a_(0,inf) = v - w with
    //   v = sum_{x != 0, inf} sum_{y != inf} a_(x,y)
    //   w = (q-2) sum_{x != inf} a_(0,x) + a_(inf,inf)
    const int inf = q;
    const int rows = sys.a.rows();
    std::vector<long long> v(rows, 0), w(rows, 0);
    for (int r = 0; r < rows; ++r) {
        for (int x = 0; x < inf; ++x) {
            if (x != 0)
                for (int y = 0; y < inf; ++y) v[r] += sys.a.at(r, sys.cols.index(x, y));
            w[r] += (q - 2) * sys.a.at(r, sys.cols.index(0, x));
        }
        w[r] += sys.a.at(r, sys.cols.index(inf, inf));
    }
    rep.identity_ok = true;
    for (int r = 0; r < rows; ++r)
        if ((q - 1) * sys.a.at(r, sys.cols.index(0, inf)) != v[r] - w[r]) rep.identity_ok = false;

    // each removed column is a rational combination of the kept ones
    RationalSolver solver(red.abar);
    rep.deleted_in_span = true;
    for (int dc : red.deleted_cols) {
        std::vector<mpq_class> b(rows), x;
        for (int r = 0; r < rows; ++r) b[r] = static_cast<long>(sys.a.at(r, dc));
        if (!solver.solve(b, x)) rep.deleted_in_span = false;
    }

    rep.pass = rep.ranks_ok && rep.identity_ok && rep.deleted_in_span;
    return rep;
}

CosetCertifier::CosetCertifier(const PglGroup& group, const IncidenceSystem& sys,
                               const ReducedSystem& red)
    : group_(&group), sys_(&sys), red_(&red), solver_(red.abar) {
    const int q = group.q();
    // for every point x, an element fixing x and nothing else; its incidence
    // row restricted to the diagonal columns is the indicator of x
    pointwise_unipotent_.assign(q + 1, -1);
    for (int g = 0; g < group.size(); ++g) {
        if (group.fixed_points(g) != 1) continue;
        for (int p = 0; p <= q; ++p)
            if (group.apply(g, p) == p) {
                if (pointwise_unipotent_[p] < 0) pointwise_unipotent_[p] = g;
                break;
            }
    }
    for (int p = 0; p <= q; ++p) {
        int g = pointwise_unipotent_[p];
        if (g < 0) throw std::logic_error("CosetCertifier: no single-fixed-point element at some point");
        for (int pp = 0; pp <= q; ++pp)
            if (sys.a.at(sys.element_to_row[g], sys.cols.index(pp, pp)) != (pp == p ? 1 : 0))
                throw std::logic_error("CosetCertifier: unexpected diagonal row pattern");
    }
    if (solver_.rank() != red.abar.cols())
        throw std::logic_error("CosetCertifier: reduced system lost column rank");
}

std::optional<std::pair<int, int>> CosetCertifier::certify(const std::vector<int>& set,
                                                           std::string* why) const {
    const auto& group = *group_;
    const int q = group.q();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return std::nullopt;
    };

    if (set.empty()) return fail("empty set");

    // translate so the identity is a member
    const int s0 = set.front();
    const int s0inv = group.inverse(s0);
    std::vector<char> member(group.size(), 0);
    for (int g : set) member[group.compose(s0inv, g)] = 1;
    if (!member[group.identity()]) return fail("translation failed to reach the identity");

    std::vector<mpq_class> b(sys_->a.rows());
    for (int r = 0; r < sys_->a.rows(); ++r) b[r] = member[sys_->row_to_element[r]] ? 1 : 0;

    std::vector<mpq_class> x;
    if (!solver_.solve(b, x))
        return fail("critical: characteristic vector is not in the reduced column span");

    // weights on the diagonal columns must be a one-point 0/1 indicator and
    // everything else must vanish
    mpq_class total = 0;
    int point = -1;
    for (int c = 0; c < static_cast<int>(x.size()); ++c) {
        auto [p1, p2] = sys_->cols.pair(red_->kept_cols[c]);
        if (p1 == p2) {
            total += x[c];
            if (x[c] == 1) {
                if (point >= 0) return fail("two diagonal columns carry weight 1");
                point = p1;
            } else if (x[c] != 0) {
                return fail("diagonal weight is not 0/1");
            }
        } else if (x[c] != 0) {
            return fail("off-diagonal weight survives full-column-rank elimination");
        }
    }
    if (total != 1 || point < 0) return fail("diagonal weights do not sum to one");

    // the solved indicator must match the pointwise-unipotent membership rows
    for (int p = 0; p <= q; ++p) {
        bool in = member[pointwise_unipotent_[p]] != 0;
        if (in != (p == point)) return fail("indicator disagrees with unipotent rows");
    }

    // confirm the translated set is exactly the stabilizer of `point`
    long long stab_size = static_cast<long long>(group.size()) / (q + 1);
    if (static_cast<long long>(set.size()) != stab_size) return fail("wrong cardinality");
    for (int g = 0; g < group.size(); ++g)
        if (member[g] && group.apply(g, point) != point) return fail("member moves the fixed point");

    return std::make_pair(group.apply(s0inv, point), point);
}

void write_text_grid(std::ostream& os, const IntMatrix& m, const std::vector<std::string>& row_labels,
                     const std::vector<std::string>& col_labels) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (const auto& c : col_labels) os << '\t' << c;
    os << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        os << row_labels[r];
        for (int c = 0; c < m.cols(); ++c) os << '\t' << m.at(r, c);
        os << '\n';
    }
}

}  // namespace derange
