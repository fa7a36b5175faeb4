#include "rotlab/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rotlab/geom.hpp"

namespace rotlab {
namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

Config Config::parse(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line, section;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3)
                throw io_error("config: malformed section header at line " +
                               std::to_string(lineno) + ": '" + t + "'");
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw io_error("config: expected 'key = value' at line " +
                           std::to_string(lineno) + ": '" + t + "'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw io_error("config: empty key at line " + std::to_string(lineno));
        if (!section.empty()) key = section + "." + key;
        c.kv_[key] = value;
    }
    return c;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool Config::has(const std::string& key) const { return kv_.count(key) != 0; }

const std::string& Config::get(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end())
        throw precondition_error("config: missing required key '" + key + "'");
    return it->second;
}

std::string Config::get_or(const std::string& key, std::string fallback) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? std::move(fallback) : it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string& v = get(key);
    errno = 0;
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || errno == ERANGE)
        throw precondition_error("config: key '" + key + "' is not a number: '" + v + "'");
    return x;
}

long Config::get_long(const std::string& key) const {
    const std::string& v = get(key);
    errno = 0;
    char* end = nullptr;
    long x = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0' || errno == ERANGE)
        throw precondition_error("config: key '" + key + "' is not an integer: '" + v +
                                 "'");
    return x;
}

std::map<std::string, std::string> Config::section(const std::string& name) const {
    std::map<std::string, std::string> out;
    const std::string prefix = name + ".";
    for (const auto& [k, v] : kv_)
        if (k.rfind(prefix, 0) == 0) out[k.substr(prefix.size())] = v;
    return out;
}

void Config::set(const std::string& key, std::string value) {
    kv_[key] = std::move(value);
}

}  // namespace rotlab
