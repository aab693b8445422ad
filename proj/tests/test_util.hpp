#pragma once

#include <cstdio>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

/// Fresh temp directory, removed on destruction.
class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    auto base = std::filesystem::temp_directory_path();
    std::random_device rd;
    for (int i = 0; i < 64; ++i) {
      auto candidate =
          base / ("bellowlab_" + tag + "_" + std::to_string(rd()));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("TempDir: cannot create temp directory");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

private:
  std::filesystem::path path_;
};

/// Minimal XML well-formedness check: the prolog is skipped, every open
/// tag must be matched in order, self-closing tags allowed, attribute
/// quotes must balance inside each tag. Good enough to catch unbalanced
/// or interleaved output from the SVG writers.
inline bool xml_well_formed(const std::string& doc, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool seen_element = false;
  while (i < doc.size()) {
    if (doc[i] != '<') {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    int quotes = 0;
    while (end < doc.size() && (doc[end] != '>' || quotes % 2 != 0)) {
      if (doc[end] == '"') ++quotes;
      ++end;
    }
    if (end >= doc.size()) return fail("unterminated tag");
    std::string tag = doc.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.empty()) return fail("empty tag");
    if (tag.front() == '?' || tag.front() == '!') continue;  // prolog/comment
    if (quotes % 2 != 0) return fail("unbalanced attribute quotes");
    if (tag.front() == '/') {
      std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name)
        return fail("mismatched close tag: " + name);
      stack.pop_back();
      continue;
    }
    seen_element = true;
    if (tag.back() == '/') continue;  // self-closing
    std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
    stack.push_back(name);
  }
  if (!stack.empty()) return fail("unclosed tag: " + stack.back());
  if (!seen_element) return fail("no elements");
  return true;
}

}  // namespace testutil
