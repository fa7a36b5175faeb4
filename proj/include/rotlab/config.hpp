#pragma once
// Flat key-value configuration files: "key = value" lines, '#' comments, and
// optional bracketed [section] headers that prefix later keys as
// "section.key".  The format is line-oriented and trivially parseable.

#include <map>
#include <string>

namespace rotlab {

class Config {
  public:
    // Parses configuration text; throws io_error on a malformed line
    // (anything that is not blank, a comment, a section, or key = value).
    static Config parse(const std::string& text);
    static Config load(const std::string& path);

    bool has(const std::string& key) const;

    // Missing keys throw precondition_error naming the key.
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, std::string fallback) const;
    double get_double(const std::string& key) const;
    long get_long(const std::string& key) const;

    // All "section.name" entries of one section, in file order of first
    // assignment, with the section prefix stripped.
    std::map<std::string, std::string> section(const std::string& name) const;

    const std::map<std::string, std::string>& all() const { return kv_; }

    void set(const std::string& key, std::string value);

  private:
    std::map<std::string, std::string> kv_;
};

}  // namespace rotlab
