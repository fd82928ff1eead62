#ifndef RAYLEIGH_CACHE_HPP
#define RAYLEIGH_CACHE_HPP

// On-disk SigmaTable:
//
//   {"format_version": 1,
//    "entries": [{"p": 1, "numerator": [...], "two_exponent": 2,
//                 "shift_factors": [[1,1]], "residual": ["1"]}, ...]}
//
// Loading re-derives every entry and requires the serialized forms to be
// byte-identical, so a stale or hand-edited cache is rejected rather than
// trusted.

#include "rayleigh/render.hpp"
#include "rayleigh/sigma.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rayleigh {

inline constexpr int cache_format_version = 1;

class cache_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline nlohmann::json table_to_json(const SigmaTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (long p = 1; p <= table.max_p(); ++p) {
        nlohmann::json e = {{"p", p}};
        e.update(to_json(table.at(p)));
        entries.push_back(std::move(e));
    }
    return {{"format_version", cache_format_version}, {"entries", std::move(entries)}};
}

inline std::string serialize_table(const SigmaTable& table) { return table_to_json(table).dump(2) + "\n"; }

inline SigmaTable table_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("format_version") || !j.contains("entries"))
        throw cache_error("cache: missing format_version or entries");
    if (j.at("format_version") != cache_format_version)
        throw cache_error("cache: unsupported format_version " + j.at("format_version").dump());

    SigmaTable loaded, fresh;
    long expected = 1;
    for (const auto& e : j.at("entries")) {
        if (e.at("p").get<long>() != expected) throw cache_error("cache: entries are not contiguous from p=1");
        FactoredRationalFn f = from_json(e);
        const FactoredRationalFn& g = derive_sigma(fresh, expected);
        if (to_json(f).dump() != to_json(g).dump())
            throw cache_error("cache: entry p=" + std::to_string(expected) + " differs from a fresh derivation");
        loaded.push_back(std::move(f));
        ++expected;
    }
    return loaded;
}

inline SigmaTable load_cache(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw cache_error("cache: cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw cache_error("cache: " + path.string() + " is not valid JSON: " + ex.what());
    }
    try {
        return table_from_json(j);
    } catch (const nlohmann::json::exception& ex) {
        throw cache_error("cache: malformed entry: " + std::string(ex.what()));
    } catch (const std::invalid_argument& ex) {
        throw cache_error("cache: malformed entry: " + std::string(ex.what()));
    }
}

inline void save_cache(const std::filesystem::path& path, const SigmaTable& table) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw cache_error("cache: cannot write " + path.string());
    out << serialize_table(table);
}

}  // namespace rayleigh

#endif  // RAYLEIGH_CACHE_HPP
