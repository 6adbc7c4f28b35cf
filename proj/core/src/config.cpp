#include "triage/config.hpp"

#include <charconv>
#include <fstream>

#include "triage/errors.hpp"

namespace triage {

namespace {

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string Config::get(const std::string& key, const std::string& fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    double v;
    auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
    if (ec != std::errc() || ptr != it->second.data() + it->second.size())
        throw schema_error("config key '" + key + "': bad number '" + it->second + "'");
    return v;
}

long long Config::get_int(const std::string& key, long long fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    long long v;
    auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
    if (ec != std::errc() || ptr != it->second.data() + it->second.size())
        throw schema_error("config key '" + key + "': bad integer '" + it->second + "'");
    return v;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file: " + path);

    Config config;
    std::string line, section;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line.substr(0, line.find('#')));
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']')
                throw schema_error("config " + path + " line " + std::to_string(line_no) +
                                   ": unterminated section header");
            section = trim(text.substr(1, text.size() - 2));
            continue;
        }
        const size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw schema_error("config " + path + " line " + std::to_string(line_no) +
                               ": expected key=value");
        std::string key = trim(text.substr(0, eq));
        if (!section.empty()) key = section + "." + key;
        config.values[key] = trim(text.substr(eq + 1));
    }
    return config;
}

}  // namespace triage
