#ifndef ORV_CORE_FORMATS_HPP_
#define ORV_CORE_FORMATS_HPP_

#include <optional>
#include <string>

#include "core/config.hpp"
#include "core/interaction.hpp"
#include "core/signature.hpp"
#include "core/trace.hpp"

namespace orv {

// Text formats:
//   .hsf  signature (lifelines and messages)
//   .hif  interaction term
//   .htf  multi-trace
//   .hcf  exploration / analysis configuration
// Whitespace is insignificant outside identifiers; comments are not part of
// the grammar. Every parse error carries a 1-based line and column.

class ParseError : public Error {
  public:
    ParseError(int line, int col, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line_(line),
          col_(col),
          message_(message) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& message() const { return message_; }

  private:
    int line_;
    int col_;
    std::string message_;
};

Signature parse_hsf(const std::string& text);
InterPtr parse_hif(const std::string& text, const Signature& sig);
// When `expected` is given the declared components must form exactly that
// partition.
MultiTrace parse_htf(const std::string& text, const Signature& sig,
                     const std::optional<Partition>& expected = std::nullopt);
ConfigFile parse_hcf(const std::string& text);

std::string serialize_hsf(const Signature& sig);
std::string serialize_hif(const InterPtr& i, const Signature& sig);
std::string serialize_htf(const MultiTrace& mu, const Signature& sig);
std::string serialize_hcf(const ConfigFile& cfg);

Partition resolve_partition(const PartitionSpec& spec, const Signature& sig);

}  // namespace orv

#endif  // ORV_CORE_FORMATS_HPP_
