#include "moore/fp_group/groups.hpp"

#include <array>
#include <fstream>
#include <map>
#include "json.hpp"
#include <sstream>

#include "moore/fp_group/errors.hpp"

namespace moore {

namespace {

using Table = std::vector<std::vector<Index>>;

// Builds a table from a closed list of elements with a multiplication functor.
template <class T, class Mul>
Table table_from(const std::vector<T>& elems, Mul mul) {
  std::map<T, Index> pos;
  for (Index i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  Table t(elems.size(), std::vector<Index>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      t[a][b] = pos.at(mul(elems[a], elems[b]));
  return t;
}

}  // namespace

FiniteGroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  Table t(n, std::vector<Index>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Index>((a + b) % n);
  }
  return FiniteGroup::from_table(t, labels, "z" + std::to_string(n));
}

FiniteGroupPtr symmetric_group_3() {
  using P = std::array<int, 3>;
  // images of (1,2,3), zero-based
  std::vector<P> elems{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto t = table_from(elems, [](const P& a, const P& b) {
    return P{a[b[0]], a[b[1]], a[b[2]]};
  });
  return FiniteGroup::from_table(t, {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}, "s3");
}

FiniteGroupPtr klein_four() {
  Table t(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return FiniteGroup::from_table(t, {"e", "a", "b", "ab"}, "k4");
}

FiniteGroupPtr dihedral_8() {
  // (k, f) = r^k s^f with s r = r^-1 s
  using E = std::pair<int, int>;
  std::vector<E> elems;
  for (int f = 0; f < 2; ++f)
    for (int k = 0; k < 4; ++k) elems.push_back({k, f});
  auto t = table_from(elems, [](const E& a, const E& b) {
    int k = a.second ? a.first - b.first : a.first + b.first;
    return E{((k % 4) + 4) % 4, a.second ^ b.second};
  });
  return FiniteGroup::from_table(
      t, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"}, "d8");
}

FiniteGroupPtr quaternion_8() {
  // (sign, unit) with unit 0=1, 1=i, 2=j, 3=k
  using E = std::pair<int, int>;
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<E> elems{{1, 0}, {-1, 0}, {1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {1, 3}, {-1, 3}};
  auto t = table_from(elems, [](const E& a, const E& b) {
    return E{a.first * b.first * sign[a.second][b.second], unit[a.second][b.second]};
  });
  return FiniteGroup::from_table(t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "q8");
}

FiniteGroupPtr group_from_json(std::string_view text, std::string name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid group JSON: ") + e.what());
  }
  if (!j.contains("order") || !j.contains("table"))
    throw DomainError("group JSON needs \"order\" and \"table\"");
  auto n = j.at("order").get<std::size_t>();
  auto t = j.at("table").get<Table>();
  if (t.size() != n) throw DomainError("group JSON table size differs from order");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteGroup::from_table(t, std::move(labels), std::move(name));
}

FiniteGroupPtr group_by_name(std::string_view name) {
  if (name == "s3") return symmetric_group_3();
  if (name == "k4") return klein_four();
  if (name == "d8") return dihedral_8();
  if (name == "q8") return quaternion_8();
  if (name.size() > 1 && name[0] == 'z' &&
      name.find_first_not_of("0123456789", 1) == std::string_view::npos)
    return cyclic_group(std::stoul(std::string(name.substr(1))));
  std::ifstream in{std::string(name)};
  if (!in) throw DomainError("unknown group '" + std::string(name) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return group_from_json(ss.str(), std::string(name));
}

}  // namespace moore
