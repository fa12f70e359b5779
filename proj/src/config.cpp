#include "georoute/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace georoute {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw ConfigError("trailing characters");
        return v;
    } catch (const ConfigError&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + text);
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + text);
    }
}

}  // namespace

Config Config::parse(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " has no '='");
        std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config: empty key or value on line " + std::to_string(lineno));

        double scale = 1.0;
        if (key.size() > 3 && key.ends_with("_km")) {
            key = key.substr(0, key.size() - 3);
            scale = 1000.0;
        } else if (key.size() > 4 && key.ends_with("_deg")) {
            key = key.substr(0, key.size() - 4);
            scale = M_PI / 180.0;
        }
        if (cfg.values_.count(key))
            throw ConfigError("config: duplicate key '" + key + "'");
        cfg.values_[key] = value;
        cfg.scales_[key] = scale;
    }
    return cfg;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

double Config::scaled(const std::string& key, double v) const {
    const auto it = scales_.find(key);
    return it == scales_.end() ? v : v * it->second;
}

double Config::number(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("config: missing required key '" + key + "'");
    return scaled(key, parse_number(key, it->second));
}

double Config::number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
}

std::uint64_t Config::integer(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("config: missing required key '" + key + "'");
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for '" + key + "': " + it->second);
    }
}

long Config::integer_or(const std::string& key, long fallback) const {
    return has(key) ? static_cast<long>(integer(key)) : fallback;
}

std::vector<double> Config::list(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("config: missing required key '" + key + "'");
    std::vector<double> out;
    std::string item;
    std::istringstream in(it->second);
    while (std::getline(in, item, ',')) {
        const std::string v = trim(item);
        if (v.empty()) throw ConfigError("config: empty list element in '" + key + "'");
        out.push_back(scaled(key, parse_number(key, v)));
    }
    if (out.empty()) throw ConfigError("config: empty list for '" + key + "'");
    return out;
}

double Config::sigma() const {
    const bool have_sigma = has("sigma");
    const bool have_alpha = has("alpha");  // normalized from alpha_deg
    if (have_sigma && have_alpha)
        throw ConfigError("config: specify either sigma or alpha_deg, not both");
    if (have_sigma) return number("sigma");
    if (have_alpha) {
        const double alpha = number("alpha");
        if (!(alpha > 0.0) || !(alpha < M_PI / 2.0))
            throw ConfigError("config: alpha_deg must lie in (0, 90)");
        return 1.0 / std::cos(alpha);
    }
    throw ConfigError("config: missing sigma (or alpha_deg)");
}

}  // namespace georoute
