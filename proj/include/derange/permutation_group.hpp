#pragma once

#include <map>
#include <string>
#include <vector>

namespace derange {

using Perm = std::vector<int>;  // image array on [0, degree)

int fix_count(const Perm& p);
Perm compose(const Perm& f, const Perm& g);  // apply f, then g
Perm inverse_perm(const Perm& p);

// A finite permutation group given by its full (duplicate-free) element
// list.  Element ids are positions in the list; the list order is fixed by
// the enumerating module, which keeps all downstream reports deterministic.
class PermutationGroup {
public:
    PermutationGroup(int degree, std::vector<Perm> elements, std::string name);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(perms_.size()); }
    const std::string& name() const { return name_; }

    const Perm& perm(int id) const { return perms_[id]; }
    int identity() const { return identity_; }
    int inverse(int id) const { return inverse_[id]; }
    int fixed_points(int id) const { return fix_count_[id]; }

    // id of "g then h"; -1 only if the element list is not closed
    int compose_ids(int g, int h) const;
    int index_of(const Perm& p) const;  // -1 if absent

private:
    int degree_;
    std::vector<Perm> perms_;
    std::string name_;
    std::map<Perm, int> index_;
    std::vector<int> inverse_;
    std::vector<int> fix_count_;
    int identity_ = -1;

    void verify_group_axioms() const;
};

}  // namespace derange
