#pragma once

#include "diagonalis/seriesbox.hpp"

#include <iosfwd>
#include <string>

namespace diagonalis {

// Text cache for expanded boxes:
//
//   diagonalis-box v1; d=<d>; N=<N>; ring=Q|Qlambda; denom=<MultiPoly JSON>
//   i_1,...,i_d:<coeff>
//   ...
//
// One line per stored entry, graded-lex order. A symmetric-storage box stores
// only non-decreasing indices; the reader infers the storage from the count.

template <CoefficientRing R>
void write_box_cache(std::ostream& out, const CoeffBox<R>& box);

template <CoefficientRing R>
CoeffBox<R> read_box_cache(std::istream& in);

/// "Q" or "Qlambda", read from the header line without consuming the stream.
std::string peek_box_cache_ring(std::istream& in);

/// Stable file name for a denominator/bound pair (FNV-1a of the header).
template <CoefficientRing R>
std::string box_cache_filename(const MultiPoly<R>& p, unsigned bound);

}  // namespace diagonalis
