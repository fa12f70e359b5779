#pragma once

// Flat key-value experiment config files:
//   key = value        # comment
// UTF-8, '.' decimal separator. Units are meters and radians unless the
// key carries an explicit _km or _deg suffix, converted at parse time
// (r0_km = 2000 stores r0 = 2e6). Lists are comma separated. The seed is
// always explicit; defaulting it would break reproducibility.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "georoute/errors.hpp"

namespace georoute {

/// Invalid or missing configuration; maps to process exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

class Config {
public:
    /// Parses file contents. Throws ConfigError on syntax errors, unknown
    /// unit suffixes or duplicate keys (after suffix normalization).
    static Config parse(const std::string& text);
    static Config load(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    double number(const std::string& key) const;
    double number_or(const std::string& key, double fallback) const;
    std::uint64_t integer(const std::string& key) const;
    long integer_or(const std::string& key, long fallback) const;
    std::vector<double> list(const std::string& key) const;

    /// sigma from either `sigma` or `alpha_deg` (exactly one of the two).
    double sigma() const;

    const std::map<std::string, std::string>& raw() const { return values_; }

private:
    std::map<std::string, std::string> values_;
    // multipliers applied per key at parse time (km -> m, deg -> rad)
    std::map<std::string, double> scales_;

    double scaled(const std::string& key, double v) const;
};

}  // namespace georoute
