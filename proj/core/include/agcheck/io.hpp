#ifndef AGCHECK_IO_HPP_
#define AGCHECK_IO_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

#include "fuzzy.hpp"
#include "groupoid.hpp"

namespace agcheck {

  //! Reads a Cayley table.  '#' starts a comment; blank lines are ignored.
  //! The first remaining line lists the labels; the next n lines are the
  //! rows, one label per cell, row i holding the products of element i with
  //! each column.  Throws ParseError with the line and column at fault.
  Groupoid parse_table(std::string_view text);

  //! The inverse of parse_table, with columns aligned.
  std::string serialize_table(Groupoid const& g);

  //! Reads "label grade" lines (grade as "p/q" or an exact decimal); every
  //! label of \p g must appear exactly once.
  FuzzySubset parse_fuzzy(std::string_view text, Groupoid const& g);

  std::string serialize_fuzzy(FuzzySubset const& f, Groupoid const& g);

}  // namespace agcheck

#endif  // AGCHECK_IO_HPP_
