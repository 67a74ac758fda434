#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "derange/character_table.hpp"
#include "derange/int_matrix.hpp"
#include "derange/projective_group.hpp"

namespace derange {

// Column labeling for point-pair incidence: the q+1 diagonal pairs (p, p)
// first, then the q(q+1) ordered distinct pairs in lex order.
class PairColumns {
public:
    explicit PairColumns(int q);

    int q() const { return q_; }
    int n_points() const { return q_ + 1; }
    int n_cols() const { return (q_ + 1) * (q_ + 1); }
    int n_diag() const { return q_ + 1; }
    int n_distinct() const { return q_ * (q_ + 1); }

    int index(int p1, int p2) const { return index_[p1 * (q_ + 1) + p2]; }
    std::pair<int, int> pair(int col) const { return pairs_[col]; }

    // index within the distinct-pair block (columns of M / N)
    int distinct_index(int p1, int p2) const { return index(p1, p2) - n_diag(); }

private:
    int q_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> index_;
};

// 0/1 incidence matrix: rows are group elements (identity first, then the
// derangements, then the rest), columns are ordered point pairs, and the
// (g, (p1, p2)) entry is 1 iff p1^g = p2.
struct IncidenceSystem {
    const PglGroup* group;
    PairColumns cols;
    IntMatrix a;
    std::vector<int> row_to_element;
    std::vector<int> element_to_row;
    int n_derangements;

    IntMatrix derangement_block() const;  // M: derangement rows, distinct columns
};

IncidenceSystem build_incidence(const PglGroup& group);

// AᵀA == q(q-1) I + (q-1)(J-I)⊗(J-I) entrywise, and its exact eigenvalue
// multiset is {|G|: 1, q^2-1: q^2, 0: 2q} (annihilating polynomial plus
// trace identities force the multiplicities).
bool gram_closed_form_check(const IncidenceSystem& sys, std::string* why = nullptr);

// The 2q difference vectors (one per non-base point, in each slot) are in
// the kernel of A, span a space of dimension exactly 2q, and the two slot
// families are orthogonal.
bool kernel_check(const IncidenceSystem& sys, std::string* why = nullptr);

IntMatrix build_gram_n(const IncidenceSystem& sys);  // N = MᵀM

struct CrossRatioFormulaReport {
    long long checked = 0;
    long long mismatches = 0;
    std::string first_mismatch;
    bool pass = false;
};
// Every entry of N (a brute-force derangement count) must equal the
// cross-ratio case formula; the count side is the oracle.
CrossRatioFormulaReport cross_ratio_formula_check(const IncidenceSystem& sys, const IntMatrix& n,
                                                  int threads = 1);

struct EigvecResult {
    std::string character;
    double s_value;
    bool eigen_ok;   // N v = s v within tolerance and v_(0,inf) = q-1
    bool positive;   // s > 0
    bool snap_ok;    // exact value matches, where a closed form is pinned
    std::string snapped;
};
struct EigvecReport {
    std::vector<EigvecResult> entries;
    bool pass = false;
};
// v_chi = sum_g chi(g^-1) e_{(0^g, inf^g)} is an eigenvector of N with
// positive eigenvalue s_chi, for chi in {lambda_1, psi_-1 (q odd), eta_j,
// nu_j}; for q even s_nu = q(q-1)/2 and s_eta = q(q+1)/2 exactly, and
// s_lambda_1 = q(q^2-1)/2 for all q.
EigvecReport eigenvector_positivity(const CharacterTable& table, const IncidenceSystem& sys,
                                    const IntMatrix& n, double tol = 1e-6);

// Columns labelled (inf, t) and (t, inf) removed.
struct ReducedSystem {
    std::vector<int> kept_cols;     // indices into the full column labeling
    std::vector<int> deleted_cols;  // the 2q removed columns
    IntMatrix abar;                 // |G| x (q^2+1)
    IntMatrix mbar;                 // |D| x q(q-1)
};
ReducedSystem build_reduced(const IncidenceSystem& sys);

struct ReducedRankReport {
    int rank_abar;
    int rank_mbar;
    bool ranks_ok;        // rank(abar) = q^2+1, mbar has full column rank
    bool identity_ok;     // (q-1) a_(0,inf) = v - w  column identity
    bool deleted_in_span; // every removed column solves against abar
    bool pass;
};
ReducedRankReport reduced_rank_check(const IncidenceSystem& sys, const ReducedSystem& red);

// Certifies a maximum independent set as a point-stabilizer coset by solving
// the reduced incidence system for its characteristic vector: the solution
// must put weight only on diagonal columns, sum to one, and be a 0/1
// indicator, which pins the stabilized point.
class CosetCertifier {
public:
    CosetCertifier(const PglGroup& group, const IncidenceSystem& sys, const ReducedSystem& red);

    // (p, p') with set == { g : p^g = p' }; nullopt with a reason otherwise.
    // A "not in the column span" failure is critical: it contradicts the
    // rank structure rather than the set's shape.
    std::optional<std::pair<int, int>> certify(const std::vector<int>& set,
                                               std::string* why = nullptr) const;

private:
    const PglGroup* group_;
    const IncidenceSystem* sys_;
    const ReducedSystem* red_;
    RationalSolver solver_;
    std::vector<int> pointwise_unipotent_;  // per point x, an element fixing only x
};

void write_text_grid(std::ostream& os, const IntMatrix& m, const std::vector<std::string>& row_labels,
                     const std::vector<std::string>& col_labels);

}  // namespace derange
