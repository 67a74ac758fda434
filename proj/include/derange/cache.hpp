#pragma once

#include <memory>
#include <string>

#include "derange/projective_group.hpp"

namespace derange {

// Binary-stable on-disk cache for enumerated group tables, keyed by the
// field parameters (which determine everything else).  Files carry a
// checksum; a corrupt or mismatched file is reported and rebuilt.
class GroupCache {
public:
    static std::string file_name(const GaloisField& field);

    // nullptr when missing or rejected; *note says why
    static std::unique_ptr<PglGroup> load(const GaloisField& field, const std::string& dir,
                                          std::string* note);

    static bool store(const PglGroup& group, const std::string& dir, std::string* note);
};

}  // namespace derange
