#include "mndp/caps.hpp"

#include <cstdlib>
#include <sstream>

namespace mndp {

Caps parse_caps(const std::string& spec, Caps base) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw input_error("caps: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        std::int64_t val;
        try {
            val = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw input_error("caps: bad value in '" + item + "'");
        }
        if (val < 0) throw input_error("caps: negative value in '" + item + "'");
        if (key == "tau") base.tau_cap = static_cast<int>(val);
        else if (key == "oracle") base.oracle_budget = val;
        else if (key == "sweep") base.sweep_budget = val;
        else if (key == "family") base.family_cap = val;
        else if (key == "exact_n") base.exact_param_n = static_cast<int>(val);
        else if (key == "vi_n") base.vi_exact_n = static_cast<int>(val);
        else if (key == "td_n") base.td_exact_n = static_cast<int>(val);
        else if (key == "fvs_n") base.fvs_exact_n = static_cast<int>(val);
        else if (key == "cvd_n") base.cvd_exact_n = static_cast<int>(val);
        else throw input_error("caps: unknown key '" + key + "'");
    }
    return base;
}

const Caps& default_caps() {
    static const Caps caps = [] {
        Caps c;
        if (const char* env = std::getenv("MNDP_CAPS")) c = parse_caps(env, c);
        return c;
    }();
    return caps;
}

}  // namespace mndp
