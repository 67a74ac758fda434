#include "derange/permutation_group.hpp"

#include <random>
#include <stdexcept>

namespace derange {

int fix_count(const Perm& p) {
    int c = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] == i) ++c;
    return c;
}

Perm compose(const Perm& f, const Perm& g) {
    Perm h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
    return h;
}

Perm inverse_perm(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> elements, std::string name)
    : degree_(degree), perms_(std::move(elements)), name_(std::move(name)) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(perms_[i].size()) != degree_)
            throw std::invalid_argument(name_ + ": element of wrong degree");
        if (!index_.emplace(perms_[i], i).second)
            throw std::invalid_argument(name_ + ": duplicate element");
    }
    inverse_.resize(n);
    fix_count_.resize(n);
    for (int i = 0; i < n; ++i) {
        fix_count_[i] = fix_count(perms_[i]);
        if (fix_count_[i] == degree_) identity_ = i;
        int inv = index_of(inverse_perm(perms_[i]));
        if (inv < 0) throw std::invalid_argument(name_ + ": not closed under inversion");
        inverse_[i] = inv;
    }
    if (identity_ < 0) throw std::invalid_argument(name_ + ": identity missing");
    verify_group_axioms();
}

int PermutationGroup::compose_ids(int g, int h) const { return index_of(compose(perms_[g], perms_[h])); }

int PermutationGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

void PermutationGroup::verify_group_axioms() const {
    // closure: exhaustive for small groups, sampled otherwise
    const int n = size();
    if (n <= 400) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (compose_ids(i, j) < 0) throw std::invalid_argument(name_ + ": not closed under composition");
    } else {
        std::mt19937_64 rng(0);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int s = 0; s < 10000; ++s)
            if (compose_ids(pick(rng), pick(rng)) < 0)
                throw std::invalid_argument(name_ + ": not closed under composition");
    }
}

}  // namespace derange
