#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcop/model.hpp"
#include "dcop/result.hpp"

namespace dcop {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

// Canonical form: variables then factors, both in id order; allowed hard
// pairs in lexicographic value order. Binary factors only.
void serialize_instance(const Instance& inst, std::ostream& out);
std::string serialize_instance_text(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

// Integers print without a decimal point, other values with up to nine
// fractional digits (trailing zeros trimmed); forbidden prints as "-inf".
std::string format_number(double v);
std::string format_utility(Utility u);

void write_results_csv(const std::vector<ResultRecord>& rows, std::ostream& out);

}  // namespace dcop
