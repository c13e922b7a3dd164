// Minimal streaming JSON writer with deterministic number formatting:
// 12 significant digits, lowercase scientific notation, insertion-ordered
// keys. Golden tests byte-compare CLI output, so formatting must not depend
// on library version or locale.
#pragma once

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace gatetime_cli {

inline std::string fmt_num(double v) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class JsonWriter {
 public:
  JsonWriter& begin_object() {
    sep();
    out_ += '{';
    first_.push_back(true);
    return *this;
  }
  JsonWriter& end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
  }
  JsonWriter& begin_array() {
    sep();
    out_ += '[';
    first_.push_back(true);
    return *this;
  }
  JsonWriter& end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
  }
  JsonWriter& key(std::string_view k) {
    sep();
    out_ += '"';
    append_escaped(k);
    out_ += "\":";
    pending_key_ = true;
    return *this;
  }
  JsonWriter& value(double v) {
    sep();
    out_ += fmt_num(v);
    return *this;
  }
  JsonWriter& value(long long v) {
    sep();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(bool v) {
    sep();
    out_ += v ? "true" : "false";
    return *this;
  }
  JsonWriter& value(std::string_view s) {
    sep();
    out_ += '"';
    append_escaped(s);
    out_ += '"';
    return *this;
  }
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(const std::string& s) {
    return value(std::string_view(s));
  }

  const std::string& str() const { return out_; }

 private:
  void sep() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) out_ += ',';
      first_.back() = false;
    }
  }
  void append_escaped(std::string_view s) {
    for (char c : s) {
      if (c == '"' || c == '\\') out_ += '\\';
      out_ += c;
    }
  }

  std::string out_;
  std::vector<bool> first_;
  bool pending_key_ = false;
};

}  // namespace gatetime_cli
