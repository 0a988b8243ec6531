#pragma once

#include <string>
#include <vector>

#include "frobkit/errors.hpp"

namespace frobkit {

/// One checked identity: what was computed, what was expected, and the verdict.
struct CheckLine {
  std::string id;
  std::string label;
  std::string computed;
  std::string expected;
  bool pass = false;
};

/// Ordered list of checks; a report passes iff every line does.
class Report {
 public:
  explicit Report(std::string name = {}) : name_(std::move(name)) {}

  void add(std::string id, std::string label, std::string computed, std::string expected, bool pass) {
    lines_.push_back({std::move(id), std::move(label), std::move(computed), std::move(expected), pass});
  }
  /// Records computed == expected as a check.
  void expect_eq(std::string id, std::string label, const std::string& computed, const std::string& expected) {
    add(std::move(id), std::move(label), computed, expected, computed == expected);
  }
  void append(const Report& other) { lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end()); }
  void note(std::string id, std::string text) { notes_.push_back(id + ": " + text); }

  const std::string& name() const { return name_; }
  const std::vector<CheckLine>& lines() const { return lines_; }
  const std::vector<std::string>& notes() const { return notes_; }

  bool all_pass() const {
    for (const auto& l : lines_) {
      if (!l.pass) return false;
    }
    return true;
  }
  const CheckLine* first_failure() const {
    for (const auto& l : lines_) {
      if (!l.pass) return &l;
    }
    return nullptr;
  }
  /// Throws VerificationFailure naming the first failed line.
  void require_pass() const {
    if (const CheckLine* f = first_failure()) {
      throw VerificationFailure(name_ + ": " + f->id + " [" + f->label + "] computed " + f->computed +
                                ", expected " + f->expected);
    }
  }

 private:
  std::string name_;
  std::vector<CheckLine> lines_;
  std::vector<std::string> notes_;
};

}  // namespace frobkit
