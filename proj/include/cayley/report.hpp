#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cayley {

// One symbolic identity check. `mode` is primal/dual for h-coefficient
// identities and family/sigma for the others.
struct IdentityCheck {
    std::string identity_name;
    std::string mode;
    std::string substitution;
    bool pass = false;
};

using Report = std::vector<IdentityCheck>;

inline bool all_pass(const Report& r) {
    for (const auto& c : r) {
        if (!c.pass) return false;
    }
    return true;
}

inline void to_json(nlohmann::json& j, const IdentityCheck& c) {
    j = nlohmann::json{{"identity_name", c.identity_name},
                       {"mode", c.mode},
                       {"substitution", c.substitution},
                       {"pass", c.pass}};
}

}  // namespace cayley
