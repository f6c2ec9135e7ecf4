#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace windcorr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file rejected; carries the path and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, long line, const std::string& detail)
      : Error(path + ":" + std::to_string(line) + ": " + detail),
        path_(path),
        line_(line) {}

  const std::string& path() const { return path_; }
  long line() const { return line_; }

 private:
  std::string path_;
  long line_;
};

// A correlation cannot be formed because one or more turbines have zero
// variance in the window. The caller decides whether to drop or abort.
class ZeroVarianceError : public Error {
 public:
  explicit ZeroVarianceError(std::vector<std::string> ids)
      : Error(describe(ids)), ids_(std::move(ids)) {}

  const std::vector<std::string>& turbine_ids() const { return ids_; }

 private:
  static std::string describe(const std::vector<std::string>& ids) {
    std::string msg = "zero-variance turbine(s):";
    for (const auto& id : ids) msg += " " + id;
    return msg;
  }
  std::vector<std::string> ids_;
};

// Circular mean requested for angles whose resultant vector vanishes.
class DegenerateMeanError : public Error {
 public:
  DegenerateMeanError()
      : Error("circular mean undefined: resultant length below 1e-9") {}
};

}  // namespace windcorr
