#include "derange/projective_group.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace derange {

std::string class_label_string(const ClassLabel& label) {
    switch (label.kind) {
        case ClassKind::Identity:
            return "1";
        case ClassKind::Unipotent:
            return "u";
        case ClassKind::Split:
            return "d[" + std::to_string(label.exp) + "]";
        case ClassKind::NonSplit:
            return "v[" + std::to_string(label.exp) + "]";
    }
    return "?";
}

PglGroup::PglGroup(const GaloisField& field, long long max_order) : PglGroup(field, EnumerateOnly{}) {
    long long q = field.q();
    if (q * (q * q - 1) > max_order) throw std::length_error("PglGroup: group order exceeds limit");
    finish_tables();
}

// Enumeration-only constructor; finish_tables() must run before use.
PglGroup::PglGroup(const GaloisField& field, EnumerateOnly)
    : field_(&field), ext_(std::make_unique<QuadExt>(field)) {
    const int q = field.q();
    elements_.reserve(static_cast<std::size_t>(q) * (q * q - 1));
    // canonical matrices in lex (a, b, c, d) order: first nonzero entry is 1
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (a == 0 && b == 0) continue;  // a = b = 0 forces det = 0
            for (int c = 0; c < q; ++c) {
                for (int d = 0; d < q; ++d) {
                    int first = a ? a : b;
                    if (first != 1) continue;
                    if (field.sub(field.mul(a, d), field.mul(b, c)) == 0) continue;
                    elements_.push_back({a, b, c, d});
                }
            }
        }
    }
    codes_.reserve(elements_.size());
    for (const auto& g : elements_) codes_.push_back(encode(g));
}

PglGroup::PglGroup(const GaloisField& field, std::vector<GroupElement> elements,
                   std::vector<Perm> perms, std::vector<int> inverse, std::vector<ClassLabel> labels,
                   std::vector<std::uint8_t> psl)
    : field_(&field),
      ext_(std::make_unique<QuadExt>(field)),
      elements_(std::move(elements)),
      perms_(std::move(perms)),
      inverse_(std::move(inverse)),
      class_of_(std::move(labels)),
      psl_member_(std::move(psl)) {
    const long long q = field.q();
    const std::size_t n = elements_.size();
    if (n != static_cast<std::size_t>(q * (q * q - 1)) || perms_.size() != n || inverse_.size() != n ||
        class_of_.size() != n || psl_member_.size() != n)
        throw std::invalid_argument("PglGroup: cached tables have wrong sizes");
    codes_.reserve(n);
    for (const auto& g : elements_) codes_.push_back(encode(g));
    for (std::size_t i = 1; i < n; ++i)
        if (codes_[i] <= codes_[i - 1]) throw std::invalid_argument("PglGroup: cached elements out of order");
    fix_count_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (perms_[i].size() != static_cast<std::size_t>(q + 1))
            throw std::invalid_argument("PglGroup: cached permutation of wrong degree");
        fix_count_[i] = fix_count(perms_[i]);
        if (fix_count_[i] == 0) derangements_.push_back(static_cast<int>(i));
    }
    identity_ = index_of({1, 0, 0, 1});
    if (identity_ < 0 || fix_count_[identity_] != q + 1)
        throw std::invalid_argument("PglGroup: cached identity missing");
}

void PglGroup::finish_tables() {
    const int n = size();
    perms_.resize(n);
    inverse_.resize(n);
    fix_count_.resize(n);
    class_of_.resize(n);
    psl_member_.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto& g = elements_[i];
        perms_[i] = action_perm(g);
        fix_count_[i] = fix_count(perms_[i]);
        if (fix_count_[i] != 0 && fix_count_[i] != 1 && fix_count_[i] != 2 && fix_count_[i] != q() + 1)
            throw std::logic_error("PglGroup: impossible fixed-point count");
        const auto& F = *field_;
        int inv = index_of(canonicalize(g.d, F.neg(g.b), F.neg(g.c), g.a));
        if (inv < 0) throw std::logic_error("PglGroup: inverse missing");
        inverse_[i] = inv;
        int det = F.sub(F.mul(g.a, g.d), F.mul(g.b, g.c));
        psl_member_[i] = F.is_square(det) ? 1 : 0;
        class_of_[i] = classify_element(g, fix_count_[i]);
        if (fix_count_[i] == 0) derangements_.push_back(i);
    }
    identity_ = index_of({1, 0, 0, 1});
    if (identity_ < 0) throw std::logic_error("PglGroup: identity missing");
}

std::uint32_t PglGroup::encode(const GroupElement& g) const {
    const std::uint32_t q = field_->q();
    return ((static_cast<std::uint32_t>(g.a) * q + g.b) * q + g.c) * q + g.d;
}

int PglGroup::index_of(const GroupElement& g) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), encode(g));
    if (it == codes_.end() || *it != encode(g)) return -1;
    return static_cast<int>(it - codes_.begin());
}

GroupElement PglGroup::canonicalize(int a, int b, int c, int d) const {
    int first = a ? a : (b ? b : (c ? c : d));
    int s = field_->inv(first);
    return {field_->mul(a, s), field_->mul(b, s), field_->mul(c, s), field_->mul(d, s)};
}

// Right action on row vectors: [x : y] -> [x a + y c : x b + y d].  The
// point t is [1 : t], infinity is [0 : 1].
Perm PglGroup::action_perm(const GroupElement& g) const {
    const auto& F = *field_;
    const int q = F.q();
    Perm perm(q + 1);
    for (int pt = 0; pt <= q; ++pt) {
        int x = pt == q ? 0 : 1;
        int y = pt == q ? 1 : pt;
        int ix = F.add(F.mul(x, g.a), F.mul(y, g.c));
        int iy = F.add(F.mul(x, g.b), F.mul(y, g.d));
        perm[pt] = ix == 0 ? q : F.div(iy, ix);
    }
    return perm;
}

int PglGroup::compose(int g, int h) const {
    const auto& F = *field_;
    const auto& x = elements_[g];
    const auto& y = elements_[h];
    int a = F.add(F.mul(x.a, y.a), F.mul(x.b, y.c));
    int b = F.add(F.mul(x.a, y.b), F.mul(x.b, y.d));
    int c = F.add(F.mul(x.c, y.a), F.mul(x.d, y.c));
    int d = F.add(F.mul(x.c, y.b), F.mul(x.d, y.d));
    return index_of(canonicalize(a, b, c, d));
}

ClassLabel PglGroup::classify_element(const GroupElement& g, int fixes) const {
    const auto& F = *field_;
    const int q = F.q();
    if (fixes == q + 1) return {ClassKind::Identity, 0};
    if (fixes == 1) return {ClassKind::Unipotent, 0};
    int tr = F.add(g.a, g.d);
    int det = F.sub(F.mul(g.a, g.d), F.mul(g.b, g.c));
    if (fixes == 2) {
        // two distinct eigenvalues in GF(q); label is their ratio up to inversion
        int r1 = -1, r2 = -1;
        for (int x = 1; x < q; ++x) {
            if (F.add(F.sub(F.mul(x, x), F.mul(tr, x)), det) == 0) {
                if (r1 < 0)
                    r1 = x;
                else
                    r2 = x;
            }
        }
        if (r1 < 0 || r2 < 0) throw std::logic_error("PglGroup: split element without two eigenvalues");
        int e = F.log(F.div(r1, r2));
        return {ClassKind::Split, std::min(e, q - 1 - e)};
    }
    // no fixed point: eigenvalues live in GF(q^2) \ GF(q)
    const auto& E = *ext_;
    int etr = E.embed(tr), edet = E.embed(det);
    for (int x = q; x < E.q2(); ++x) {  // roots are outside the base field
        if (E.add(E.sub(E.mul(x, x), E.mul(etr, x)), edet) == 0) {
            int e = E.coset_log(x);
            return {ClassKind::NonSplit, std::min(e, q + 1 - e)};
        }
    }
    throw std::logic_error("PglGroup: derangement without eigenvalue in GF(q^2)");
}

int PglGroup::cross_ratio(int alpha, int delta, int gamma, int beta) const {
    const auto& F = *field_;
    const int q = F.q();
    // d(P, Q) plays the role of P - Q via the 2x2 determinant of the
    // homogeneous representatives
    auto d = [&](int pp, int qq) {
        int px = pp == q ? 0 : 1, py = pp == q ? 1 : pp;
        int qx = qq == q ? 0 : 1, qy = qq == q ? 1 : qq;
        return F.sub(F.mul(py, qx), F.mul(px, qy));
    };
    int num = F.mul(d(alpha, gamma), d(delta, beta));
    int den = F.mul(d(alpha, beta), d(delta, gamma));
    if (den == 0 && num == 0) throw std::domain_error("cross_ratio: indeterminate 0/0");
    if (den == 0) return q;  // infinity
    return F.div(num, den);
}

PermutationGroup PglGroup::permutation_group() const {
    return PermutationGroup(n_points(), perms_, "PGL(2," + std::to_string(q()) + ")");
}

PglGroup::PslView PglGroup::psl_subgroup() const {
    PslView view{PermutationGroup(1, {Perm{0}}, "trivial"), {}, field_->p() == 2};
    std::vector<Perm> perms;
    for (int i = 0; i < size(); ++i) {
        if (psl_member_[i]) {
            view.pgl_ids.push_back(i);
            perms.push_back(perms_[i]);
        }
    }
    view.group = PermutationGroup(n_points(), std::move(perms), "PSL(2," + std::to_string(q()) + ")");
    return view;
}

PermutationGroup make_agl1(const GaloisField& field) {
    const int q = field.q();
    std::vector<Perm> perms;
    perms.reserve(static_cast<std::size_t>(q) * (q - 1));
    for (int a = 1; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            Perm p(q);
            for (int x = 0; x < q; ++x) p[x] = field.add(field.mul(a, x), b);
            perms.push_back(std::move(p));
        }
    }
    return PermutationGroup(q, std::move(perms), "AGL(1," + std::to_string(q) + ")");
}

}  // namespace derange
