#include "glat/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "glat/errors.hpp"
#include "glat/subgroups.hpp"

namespace glat {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_power_of_two(long long v) { return v > 0 && (v & (v - 1)) == 0; }

std::string exp_name(const std::string& base, long long e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

GroupSpec parse_group_spec(const std::string& s) {
  GroupSpec spec;
  spec.raw = s;

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto fail = [&](const std::string& what, std::size_t pos) -> void {
    throw Error(ErrorKind::ParseError,
                what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  };

  skip_ws();
  if (i >= s.size()) fail("empty group spec", i);

  // file:<path> is taken verbatim (no product parsing; paths may contain x).
  {
    static const char prefix[] = "file:";
    bool matches = true;
    for (std::size_t k = 0; k < 5; ++k)
      if (i + k >= s.size() ||
          std::tolower(static_cast<unsigned char>(s[i + k])) != prefix[k]) {
        matches = false;
        break;
      }
    if (matches) {
      spec.kind = SpecKind::FilePath;
      spec.path = s.substr(i + 5);
      while (!spec.path.empty() && std::isspace(static_cast<unsigned char>(spec.path.back())))
        spec.path.pop_back();
      if (spec.path.empty()) fail("empty file path", i + 5);
      spec.canonical = "file:" + spec.path;
      return spec;
    }
  }

  auto parse_number = [&](const char* what) -> long long {
    const std::size_t start = i;
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 100000000) fail(std::string(what) + " is too large", start);
      ++i;
    }
    if (i == start) fail(std::string("expected ") + what, start);
    return v;
  };

  while (true) {
    skip_ws();
    if (i >= s.size()) fail("expected a group family", i);
    const std::size_t atom_pos = i;
    const char letter =
        static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    if (!std::isalpha(static_cast<unsigned char>(s[i]))) fail("expected a group family", i);
    ++i;

    FamilyAtom atom;
    atom.family = letter;
    switch (letter) {
      case 'C': {
        atom.n = parse_number("cyclic order");
        if (atom.n < 1)
          throw Error(ErrorKind::ParameterOutOfRange, "C needs n >= 1");
        spec.canonical += spec.canonical.empty() ? "" : " x ";
        spec.canonical += "C" + std::to_string(atom.n);
        break;
      }
      case 'D': {
        atom.n = parse_number("dihedral parameter");
        if (atom.n < 3)
          throw Error(ErrorKind::ParameterOutOfRange,
                      "D" + std::to_string(atom.n) + ": dihedral needs m >= 3 (order 2m)");
        spec.canonical += spec.canonical.empty() ? "" : " x ";
        spec.canonical += "D" + std::to_string(atom.n);
        break;
      }
      case 'Q': {
        atom.n = parse_number("quaternion order");
        if (!is_power_of_two(atom.n) || atom.n < 8)
          throw Error(ErrorKind::ParameterOutOfRange,
                      "Q" + std::to_string(atom.n) +
                          ": generalized quaternion order must be a power of two >= 8");
        spec.canonical += spec.canonical.empty() ? "" : " x ";
        spec.canonical += "Q" + std::to_string(atom.n);
        break;
      }
      case 'S':
      case 'A': {
        atom.n = parse_number("degree");
        if (atom.n < 1 || atom.n > 6)
          throw Error(ErrorKind::ParameterOutOfRange,
                      std::string(1, letter) + std::to_string(atom.n) +
                          ": degree must be between 1 and 6");
        spec.canonical += spec.canonical.empty() ? "" : " x ";
        spec.canonical += std::string(1, letter) + std::to_string(atom.n);
        break;
      }
      case 'E': {
        atom.n = parse_number("prime");
        if (i >= s.size() || s[i] != '^') fail("expected '^' after the prime", i);
        ++i;
        atom.k = parse_number("exponent");
        if (!is_prime(atom.n))
          throw Error(ErrorKind::ParameterOutOfRange,
                      "E" + std::to_string(atom.n) + "^" + std::to_string(atom.k) +
                          ": base must be prime");
        if (atom.k < 1)
          throw Error(ErrorKind::ParameterOutOfRange, "E needs exponent k >= 1");
        spec.canonical += spec.canonical.empty() ? "" : " x ";
        spec.canonical += "E" + std::to_string(atom.n) + "^" + std::to_string(atom.k);
        break;
      }
      default:
        throw Error(ErrorKind::UnknownFamily,
                    std::string("unknown family '") + letter + "' at position " +
                        std::to_string(atom_pos) + " in \"" + s + "\"");
    }
    spec.atoms.push_back(atom);

    skip_ws();
    if (i >= s.size()) break;
    if (std::tolower(static_cast<unsigned char>(s[i])) == 'x') {
      ++i;
      continue;
    }
    fail("unexpected trailing input", i);
  }

  spec.kind = spec.atoms.size() > 1 ? SpecKind::ProductExpression : SpecKind::CatalogName;
  return spec;
}

GroupTable cyclic_group(int n) {
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>((a + b) % n);
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  names.emplace_back("e");
  for (int a = 1; a < n; ++a) names.push_back(exp_name("a", a));
  return GroupTable(n, std::move(table), "C" + std::to_string(n), std::move(names));
}

GroupTable dihedral_group(int m) {
  if (m < 3)
    throw Error(ErrorKind::ParameterOutOfRange, "dihedral needs m >= 3 (order 2m)");
  // Index i<m is the rotation r^i, index m+i the reflection s r^i.
  const int n = 2 * m;
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](int flip, int rot) { return flip ? m + rot : rot; };
  for (int a = 0; a < n; ++a) {
    const int fa = a >= m, ra = fa ? a - m : a;
    for (int b = 0; b < n; ++b) {
      const int fb = b >= m, rb = fb ? b - m : b;
      int rot;
      if (!fa)
        rot = fb ? (rb - ra + m) % m : (ra + rb) % m;  // r^a s r^b = s r^(b-a)
      else
        rot = fb ? (rb - ra + m) % m : (ra + rb) % m;  // s r^a s r^b = r^(b-a)
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(idx(fa ^ fb, rot));
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(n));
  names[0] = "e";
  for (int r = 1; r < m; ++r) names[static_cast<std::size_t>(r)] = exp_name("r", r);
  names[static_cast<std::size_t>(m)] = "s";
  for (int r = 1; r < m; ++r)
    names[static_cast<std::size_t>(m + r)] = "s" + exp_name("r", r);
  return GroupTable(n, std::move(table), "D" + std::to_string(m), std::move(names));
}

GroupTable generalized_quaternion_group(int order) {
  if (!is_power_of_two(order) || order < 8)
    throw Error(ErrorKind::ParameterOutOfRange,
                "generalized quaternion order must be a power of two >= 8");
  // Elements a^i b^j with i in Z_m (m = order/2), j in {0,1}; b^2 = a^(m/2),
  // b a^i = a^-i b. Index = i + j*m.
  const int m = order / 2;
  const int n = order;
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](int i, int j) { return i + j * m; };
  for (int x = 0; x < n; ++x) {
    const int i = x % m, j = x / m;
    for (int y = 0; y < n; ++y) {
      const int k = y % m, l = y / m;
      int ri, rj;
      if (j == 0) {
        ri = (i + k) % m;
        rj = l;
      } else if (l == 0) {
        ri = (i - k + m) % m;
        rj = 1;
      } else {
        ri = (i - k + m / 2 + m) % m;
        rj = 0;
      }
      table[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(idx(ri, rj));
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    names[static_cast<std::size_t>(idx(i, 0))] = i == 0 ? "e" : exp_name("a", i);
    names[static_cast<std::size_t>(idx(i, 1))] = i == 0 ? "b" : exp_name("a", i) + "b";
  }
  GroupTable g(n, std::move(table), "Q" + std::to_string(order), std::move(names));

  // The defining relations for a=(1,0), b=(0,1) must hold on the table.
  const int a = idx(1, 0), b = idx(0, 1);
  int apow = g.identity();
  for (int t = 0; t < m / 2; ++t) apow = g.mul(apow, a);  // a^(2^(n-2)) = a^(m/2)
  if (apow != g.mul(b, b))
    throw Error(ErrorKind::BadTable, "quaternion relation a^(2^(n-2)) = b^2 fails");
  int afull = g.identity();
  for (int t = 0; t < m; ++t) afull = g.mul(afull, a);
  if (afull != g.identity())
    throw Error(ErrorKind::BadTable, "quaternion relation a^(2^(n-1)) = 1 fails");
  if (g.mul(g.mul(g.inverse(b), a), b) != g.inverse(a))
    throw Error(ErrorKind::BadTable, "quaternion relation b^-1 a b = a^-1 fails");
  return g;
}

GroupTable symmetric_group(int n) {
  if (n < 1 || n > 6)
    throw Error(ErrorKind::ParameterOutOfRange, "symmetric group degree must be 1..6");
  std::vector<Perm> gens;
  if (n == 1) {
    gens.push_back(identity_perm(1));
  } else {
    Perm t = identity_perm(n);
    std::swap(t[0], t[1]);
    gens.push_back(std::move(t));
    if (n > 2) {
      Perm c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((i + 1) % n);
      gens.push_back(std::move(c));
    }
  }
  GroupTable g = build_from_generators(n, gens, "S" + std::to_string(n));
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  if (g.order() != fact)
    throw Error(ErrorKind::BadTable, "symmetric group closure has wrong order");
  return g;
}

GroupTable alternating_group(int n) {
  if (n < 1 || n > 6)
    throw Error(ErrorKind::ParameterOutOfRange, "alternating group degree must be 1..6");
  std::vector<Perm> gens;
  if (n < 3) {
    gens.push_back(identity_perm(std::max(n, 1)));
  } else {
    for (int i = 0; i + 2 < n; ++i) {
      Perm p = identity_perm(n);
      p[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i + 1);
      p[static_cast<std::size_t>(i + 1)] = static_cast<std::uint16_t>(i + 2);
      p[static_cast<std::size_t>(i + 2)] = static_cast<std::uint16_t>(i);
      gens.push_back(std::move(p));
    }
  }
  GroupTable g = build_from_generators(std::max(n, 1), gens, "A" + std::to_string(n));
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  const long long want = n < 2 ? 1 : fact / 2;
  if (g.order() != want)
    throw Error(ErrorKind::BadTable, "alternating group closure has wrong order");
  return g;
}

GroupTable elementary_abelian_group(int p, int k) {
  long long n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  const int no = static_cast<int>(n);
  // Vectors over F_p in base-p digit order, componentwise addition.
  std::vector<std::uint16_t> table(static_cast<std::size_t>(no) * no);
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      int x = a, y = b, pw = 1, r = 0;
      for (int d = 0; d < k; ++d) {
        r += ((x % p + y % p) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      table[static_cast<std::size_t>(a) * no + b] = static_cast<std::uint16_t>(r);
    }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(no));
  for (int a = 0; a < no; ++a) {
    if (a == 0) {
      names.emplace_back("e");
      continue;
    }
    std::string s = "(";
    int x = a;
    for (int d = 0; d < k; ++d) {
      if (d) s += ",";
      s += std::to_string(x % p);
      x /= p;
    }
    s += ")";
    names.push_back(std::move(s));
  }
  return GroupTable(no, std::move(table),
                    "E" + std::to_string(p) + "^" + std::to_string(k), std::move(names));
}

namespace {

GroupTable realize_atom(const FamilyAtom& atom, int element_cap) {
  long long order = 0;
  switch (atom.family) {
    case 'C': order = atom.n; break;
    case 'D': order = 2 * atom.n; break;
    case 'Q': order = atom.n; break;
    case 'S': {
      order = 1;
      for (int i = 2; i <= atom.n; ++i) order *= i;
      break;
    }
    case 'A': {
      order = 1;
      for (int i = 2; i <= atom.n; ++i) order *= i;
      if (atom.n >= 2) order /= 2;
      break;
    }
    case 'E': {
      order = 1;
      for (int i = 0; i < atom.k; ++i) {
        order *= atom.n;
        if (order > kDefaultElementCap * 16LL) break;
      }
      break;
    }
    default:
      throw Error(ErrorKind::UnknownFamily, std::string("unknown family '") + atom.family + "'");
  }
  if (order > element_cap)
    throw Error(ErrorKind::ClosureTooLarge,
                "group order " + std::to_string(order) + " exceeds element cap " +
                    std::to_string(element_cap));
  switch (atom.family) {
    case 'C': return cyclic_group(static_cast<int>(atom.n));
    case 'D': return dihedral_group(static_cast<int>(atom.n));
    case 'Q': return generalized_quaternion_group(static_cast<int>(atom.n));
    case 'S': return symmetric_group(static_cast<int>(atom.n));
    case 'A': return alternating_group(static_cast<int>(atom.n));
    default: return elementary_abelian_group(static_cast<int>(atom.n), static_cast<int>(atom.k));
  }
}

}  // namespace

GroupTable catalog_group(const GroupSpec& spec, int element_cap) {
  if (spec.kind == SpecKind::FilePath)
    throw Error(ErrorKind::UnknownFamily, "file specs are not catalog groups");
  GroupTable g = realize_atom(spec.atoms.front(), element_cap);
  for (std::size_t i = 1; i < spec.atoms.size(); ++i)
    g = direct_product(g, realize_atom(spec.atoms[i], element_cap), element_cap);
  g.rename(spec.canonical);
  return g;
}

GroupTable realize_group(const GroupSpec& spec, int element_cap) {
  if (spec.kind == SpecKind::FilePath) return load_group_file(spec.path, element_cap);
  return catalog_group(spec, element_cap);
}

namespace {

using nlohmann::json;

[[noreturn]] void file_error(const std::string& name, const std::string& what) {
  throw Error(ErrorKind::BadGroupFile, name + ": " + what);
}

GroupTable load_generator_form(const json& doc, const std::string& name, int element_cap) {
  const auto& jd = doc.at("degree");
  if (!jd.is_number_integer() || jd.get<long long>() < 1)
    file_error(name, "\"degree\" must be a positive integer");
  const long long degree = jd.get<long long>();
  if (degree > 65535) file_error(name, "\"degree\" is too large");
  if (!doc.contains("generators") || !doc.at("generators").is_array() ||
      doc.at("generators").empty())
    file_error(name, "\"generators\" must be a non-empty array of permutations");
  std::vector<Perm> gens;
  const auto& arr = doc.at("generators");
  for (std::size_t gi = 0; gi < arr.size(); ++gi) {
    const auto& jp = arr[gi];
    if (!jp.is_array() || jp.size() != static_cast<std::size_t>(degree))
      file_error(name, "\"generators[" + std::to_string(gi) + "]\" must list " +
                           std::to_string(degree) + " images");
    Perm p(static_cast<std::size_t>(degree));
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (std::size_t i = 0; i < jp.size(); ++i) {
      if (!jp[i].is_number_integer())
        file_error(name, "\"generators[" + std::to_string(gi) + "][" + std::to_string(i) +
                             "]\" must be an integer");
      const long long v = jp[i].get<long long>();
      if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
        file_error(name, "\"generators[" + std::to_string(gi) +
                             "]\" is not a permutation of 0.." + std::to_string(degree - 1));
      seen[static_cast<std::size_t>(v)] = true;
      p[i] = static_cast<std::uint16_t>(v);
    }
    gens.push_back(std::move(p));
  }
  return build_from_generators(static_cast<int>(degree), gens, name, element_cap);
}

GroupTable load_cayley_form(const json& doc, const std::string& name, int element_cap) {
  const auto& jo = doc.at("order");
  if (!jo.is_number_integer() || jo.get<long long>() < 1)
    file_error(name, "\"order\" must be a positive integer");
  const long long order = jo.get<long long>();
  if (order > element_cap)
    throw Error(ErrorKind::ClosureTooLarge,
                name + ": order " + std::to_string(order) + " exceeds element cap " +
                    std::to_string(element_cap));
  if (!doc.contains("table") || !doc.at("table").is_array() ||
      doc.at("table").size() != static_cast<std::size_t>(order))
    file_error(name, "\"table\" must be an array of " + std::to_string(order) + " rows");
  std::vector<std::uint16_t> table(static_cast<std::size_t>(order) * order);
  const auto& rows = doc.at("table");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(order))
      file_error(name, "\"table[" + std::to_string(r) + "]\" must list " +
                           std::to_string(order) + " entries");
    std::vector<bool> seen(static_cast<std::size_t>(order), false);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer())
        file_error(name, "\"table[" + std::to_string(r) + "][" + std::to_string(c) +
                             "]\" must be an integer");
      const long long v = row[c].get<long long>();
      if (v < 0 || v >= order)
        file_error(name, "\"table[" + std::to_string(r) + "][" + std::to_string(c) +
                             "]\" = " + std::to_string(v) + " is out of range");
      if (seen[static_cast<std::size_t>(v)])
        file_error(name, "\"table[" + std::to_string(r) + "]\" is not a permutation (row " +
                             std::to_string(r) + ")");
      seen[static_cast<std::size_t>(v)] = true;
      table[r * static_cast<std::size_t>(order) + c] = static_cast<std::uint16_t>(v);
    }
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    const auto& jn = doc.at("names");
    if (!jn.is_array() || jn.size() != static_cast<std::size_t>(order))
      file_error(name, "\"names\" must list " + std::to_string(order) + " strings");
    for (const auto& v : jn) {
      if (!v.is_string()) file_error(name, "\"names\" must list strings");
      names.push_back(v.get<std::string>());
    }
  }
  try {
    return GroupTable::from_untrusted(static_cast<int>(order), std::move(table), name,
                                      std::move(names));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BadTable)
      throw Error(ErrorKind::BadGroupFile, name + ": " + e.what());
    throw;
  }
}

}  // namespace

GroupTable load_group_json(const std::string& text, const std::string& display_name,
                           int element_cap) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    file_error(display_name, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) file_error(display_name, "top level must be an object");
  if (doc.contains("degree")) return load_generator_form(doc, display_name, element_cap);
  if (doc.contains("order")) return load_cayley_form(doc, display_name, element_cap);
  file_error(display_name, "expected a \"degree\" (generator form) or \"order\" (cayley form) field");
}

GroupTable load_group_file(const std::string& path, int element_cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadGroupFile, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_group_json(buf.str(), "file:" + path, element_cap);
}

}  // namespace glat
