#pragma once

#include <stdexcept>
#include <string>

#include "mrt/gaussfield.hpp"

namespace mrt {

/// Malformed field-spec document. `line`/`column` are 1-based and zero when
/// the problem is semantic rather than syntactic.
class FieldSpecError : public std::runtime_error {
 public:
  FieldSpecError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Field-spec JSON:
//   {"m":int,"n":int,"components":[{"index":[...],"terms":[
//       {"coeff":[re,im],"power":[...],"width":a,"center":[...]}]}]}
// Component indices are 1-based in the document.

std::string field_to_json(const GaussField& f);
GaussField field_from_json(const std::string& text);
GaussField load_field(const std::string& path);

}  // namespace mrt
