#pragma once

#include <string>
#include <vector>

#include "glat/group.hpp"

namespace glat {

enum class SpecKind { CatalogName, ProductExpression, FilePath };

struct FamilyAtom {
  char family = 0;  // 'C','D','Q','S','A','E'
  long long n = 0;  // order parameter (p for E)
  long long k = 0;  // exponent for E
};

// A parsed textual group description: a catalog family name, a direct
// product expression, or a "file:<path>" reference.
struct GroupSpec {
  std::string raw;
  SpecKind kind = SpecKind::CatalogName;
  std::string canonical;          // normalized display form
  std::vector<FamilyAtom> atoms;  // empty for file specs
  std::string path;               // file specs only
};

// Grammar: C<n>; D<m> (order 2m, m>=3); Q<2^n> (power of two >= 8);
// S<n>/A<n> (n<=6); E<p>^<k> (p prime); "X x Y" products, left-associative;
// "file:<path>". Case-insensitive, whitespace around 'x' optional.
GroupSpec parse_group_spec(const std::string& s);

// Families and products; file specs are handled by load_group_file.
GroupTable catalog_group(const GroupSpec& spec, int element_cap = kDefaultElementCap);

// Dispatches on spec kind (catalog families, products, or file loading).
GroupTable realize_group(const GroupSpec& spec, int element_cap = kDefaultElementCap);

// JSON file with either {"degree": d, "generators": [[...],...]} or
// {"order": n, "table": [[...],...], "names": [...]} (names optional).
// Cayley-form tables get the full group-axiom check.
GroupTable load_group_file(const std::string& path, int element_cap = kDefaultElementCap);

// Same, from an in-memory JSON document (display_name used for messages).
GroupTable load_group_json(const std::string& text, const std::string& display_name,
                           int element_cap = kDefaultElementCap);

GroupTable cyclic_group(int n);
GroupTable dihedral_group(int m);                    // order 2m, m >= 3
GroupTable generalized_quaternion_group(int order);  // power of two >= 8
GroupTable symmetric_group(int n);                   // n <= 6
GroupTable alternating_group(int n);                 // n <= 6
GroupTable elementary_abelian_group(int p, int k);

}  // namespace glat
