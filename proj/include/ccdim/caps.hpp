#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace ccdim {

/// Enumeration limits. Every exhaustive routine checks its work size against
/// one of these before starting.
struct Caps {
    std::uint64_t codewords = std::uint64_t{1} << 24;   // q^k for codeword sweeps
    std::uint64_t subspaces = 100'000'000;              // Gaussian binomial per subspace sweep
    std::uint64_t subsets = std::uint64_t{1} << 24;     // 2^n for subset sums
    std::uint64_t field_order = 4096;                   // largest q accepted by make_field
    std::uint64_t code_subsets = 50'000'000;            // C(#points, n) in the code search

    /// Parses "codewords=N,subspaces=N,subsets=N" (any subset of keys, any order).
    static Caps parse(std::string_view text) { return parse(text, Caps()); }

    static Caps parse(std::string_view text, Caps base) {
        while (!text.empty()) {
            auto comma = text.find(',');
            auto item = text.substr(0, comma);
            text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string_view::npos) throw ParseError("CCDIM_CAPS: expected key=value, got '" + std::string(item) + "'");
            auto key = item.substr(0, eq);
            std::string value(item.substr(eq + 1));
            char* end = nullptr;
            auto parsed = std::strtoull(value.c_str(), &end, 10);
            if (value.empty() || *end != '\0') throw ParseError("CCDIM_CAPS: bad number '" + value + "'");
            if (key == "codewords") base.codewords = parsed;
            else if (key == "subspaces") base.subspaces = parsed;
            else if (key == "subsets") base.subsets = parsed;
            else if (key == "field") base.field_order = parsed;
            else if (key == "codes") base.code_subsets = parsed;
            else throw ParseError("CCDIM_CAPS: unknown key '" + std::string(key) + "'");
        }
        return base;
    }

    static Caps from_env() {
        const char* env = std::getenv("CCDIM_CAPS");
        return env ? parse(env) : Caps{};
    }
};

/// Process-wide defaults, read once from CCDIM_CAPS.
inline const Caps& default_caps() {
    static const Caps caps = Caps::from_env();
    return caps;
}

inline void check_cap(std::uint64_t work, std::uint64_t cap, std::string_view what) {
    if (work > cap)
        throw CapExceeded(std::string(what) + ": " + std::to_string(work) + " exceeds cap " + std::to_string(cap));
}

}  // namespace ccdim
