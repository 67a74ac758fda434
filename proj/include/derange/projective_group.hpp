#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "derange/finite_field.hpp"
#include "derange/permutation_group.hpp"

namespace derange {

// Projective points are integers in [0, q]: codes [0, q) are the field
// elements in enumeration order, code q is the point at infinity.
inline int infinity_point(int q) { return q; }

// 2x2 matrix over GF(q) by element codes.  Canonical form: the first
// nonzero entry in scan order (a, b, c, d) equals 1, which picks a unique
// representative of each scalar class.
struct GroupElement {
    int a, b, c, d;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

enum class ClassKind : std::uint8_t { Identity, Unipotent, Split, NonSplit };

// Conjugacy-class label.  For Split, exp is the discrete log of the ratio of
// the two eigenvalues, canonicalized to min(e, q-1-e); for NonSplit, exp is
// the coset log of an eigenvalue in GF(q^2), canonicalized to min(e, q+1-e).
struct ClassLabel {
    ClassKind kind;
    int exp = 0;
    friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

std::string class_label_string(const ClassLabel& label);

// PGL(2, q) acting on the projective line, enumerated as canonical matrices
// in lexicographic (a, b, c, d) order.
class PglGroup {
public:
    explicit PglGroup(const GaloisField& field, long long max_order = kDefaultMaxOrder);

    const GaloisField& field() const { return *field_; }
    const QuadExt& ext() const { return *ext_; }
    int q() const { return field_->q(); }
    int n_points() const { return q() + 1; }
    int size() const { return static_cast<int>(elements_.size()); }

    const GroupElement& element(int id) const { return elements_[id]; }
    int index_of(const GroupElement& g) const;  // canonical g; -1 if absent
    int identity() const { return identity_; }

    int compose(int g, int h) const;  // matrix product g * h
    int inverse(int g) const { return inverse_[g]; }

    const Perm& perm(int id) const { return perms_[id]; }
    int apply(int id, int point) const { return perms_[id][point]; }
    int fixed_points(int id) const { return fix_count_[id]; }

    const ClassLabel& classify(int id) const { return class_of_[id]; }
    bool psl_member(int id) const { return psl_member_[id] != 0; }

    // ids of fixed-point-free elements, ascending
    const std::vector<int>& derangements() const { return derangements_; }

    // Cross-ratio of four points, evaluated with homogeneous coordinates so
    // the point at infinity needs no special casing.  Returns a tagged scalar
    // in [0, q]: codes [0, q) are field values, q is infinity.  Throws
    // std::domain_error on the indeterminate 0/0 case.
    int cross_ratio(int alpha, int delta, int gamma, int beta) const;

    PermutationGroup permutation_group() const;

    struct PslView {
        PermutationGroup group;
        std::vector<int> pgl_ids;  // PSL id -> PGL id
        bool equals_pgl;           // q even
    };
    PslView psl_subgroup() const;

    static constexpr long long kDefaultMaxOrder = 600000;

private:
    const GaloisField* field_;
    std::unique_ptr<QuadExt> ext_;
    std::vector<GroupElement> elements_;
    std::vector<std::uint32_t> codes_;  // lex encodings, ascending
    std::vector<Perm> perms_;
    std::vector<int> inverse_;
    std::vector<int> fix_count_;
    std::vector<ClassLabel> class_of_;
    std::vector<std::uint8_t> psl_member_;
    std::vector<int> derangements_;
    int identity_;

    friend class GroupCache;
    struct EnumerateOnly {};
    PglGroup(const GaloisField& field, EnumerateOnly);
    // re-assembly from cached tables; validates structure
    PglGroup(const GaloisField& field, std::vector<GroupElement> elements, std::vector<Perm> perms,
             std::vector<int> inverse, std::vector<ClassLabel> labels, std::vector<std::uint8_t> psl);
    void finish_tables();
    std::uint32_t encode(const GroupElement& g) const;
    GroupElement canonicalize(int a, int b, int c, int d) const;
    Perm action_perm(const GroupElement& g) const;
    ClassLabel classify_element(const GroupElement& g, int fixes) const;
};

// The affine maps x -> a x + b on the q field elements, a != 0, enumerated
// in lexicographic (a, b) order.
PermutationGroup make_agl1(const GaloisField& field);

}  // namespace derange
