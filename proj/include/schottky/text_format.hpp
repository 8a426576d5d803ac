#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "schottky/description.hpp"
#include "schottky/topology.hpp"

namespace schottky {

/// Malformed description document; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Line-oriented document:
///
///   schottky v1; m=2; s=2; N=1            (or: variant=genus0; s=<int>,
///                                          or: variant=custom)
///   <k> | <label> | a b c d | center radius | left right
///
/// one record per index in increasing order; rationals as "p/q"; "-" for an
/// unlabelled generator. parse(serialize(d)) reproduces d exactly and
/// serialize(parse(text)) == text for documents serialize produced.
std::string serialize(const SchottkyDescription& desc);
SchottkyDescription parse_description(std::string_view text);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const SurfaceSignature& sig);
nlohmann::json to_json(const EndsProfile& profile);

}  // namespace schottky
