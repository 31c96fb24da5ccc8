#pragma once

#include <gmpxx.h>

#include <string>

namespace liewild {

/// Exact rational scalar. Canonical form throughout: lowest terms,
/// positive denominator, zero stored as 0/1. GMP keeps arithmetic results
/// canonical as long as the operands are.
using Rat = mpq_class;
using Int = mpz_class;

/// Canonicalizing factory. Throws InternalError on a zero denominator.
Rat rat(long num, long den = 1);

/// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed text or q = 0.
Rat rat_parse(const std::string& text);

/// Renders "p" for integers, "p/q" otherwise. rat_parse(rat_str(x)) == x.
std::string rat_str(const Rat& value);

}  // namespace liewild
