#pragma once

#include <cstdint>
#include <string>

namespace exalg {

struct PropertyResult {
    bool ok = true;
    size_t cases = 0;
    std::string detail;  // description of the first failure, if any
};

/// contains_monomial on random small monomial ideals agrees with the
/// Groebner membership test on the same generators.
PropertyResult check_membership_agreement(uint64_t seed, size_t cases);

/// The reduced Groebner basis is invariant under generator permutations and
/// unimodular integer recombinations (random ideals, <= 3 vars, degree <= 3).
PropertyResult check_gb_input_invariance(uint64_t seed, size_t cases);

/// pretty-print(parse(ast)) reparses to an identical AST for random
/// grammar-shaped expressions.
PropertyResult check_parser_roundtrip(uint64_t seed, size_t cases);

/// parse() never crashes: every byte string yields a value or a ParseError.
PropertyResult check_parser_totality(uint64_t seed, size_t cases);

/// Monomial-engine evaluation agrees with the Groebner route on random
/// expressions whose literals are monomial.
PropertyResult check_route_agreement(uint64_t seed, size_t cases);

}  // namespace exalg
