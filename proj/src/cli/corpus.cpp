#include "commnil/corpus.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commnil/errors.hpp"
#include "commnil/structure.hpp"

namespace commnil {

namespace {

using Json = nlohmann::json;

Permutation cyc(std::size_t degree, std::string_view text) {
  return Permutation::from_cycles(text, degree);
}

GroupDescriptor make(std::string id, std::size_t degree, std::vector<Permutation> gens,
                     std::uint64_t order, std::vector<std::string> tags) {
  GroupDescriptor d;
  d.id = std::move(id);
  d.degree = degree;
  d.generators = std::move(gens);
  d.expected_order = order;
  d.tags = std::move(tags);
  return d;
}

// Right regular representation of the group generated by `gens` under
// `mul`. Elements are enumerated breadth-first from the identity.
using Element = std::vector<int>;
using Multiply = std::function<Element(const Element &, const Element &)>;

std::vector<Permutation> regular_representation(const Element &identity,
                                                const std::vector<Element> &gens,
                                                const Multiply &mul) {
  std::map<Element, std::size_t> index{{identity, 0}};
  std::vector<Element> elements{identity};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto &g : gens) {
      Element next = mul(elements[i], g);
      if (index.emplace(next, elements.size()).second)
        elements.push_back(next);
    }
  }
  std::vector<Permutation> out;
  for (const auto &g : gens) {
    std::vector<Point> images(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
      images[i] = static_cast<Point>(index.at(mul(elements[i], g)));
    out.push_back(Permutation::from_images0(std::move(images)));
  }
  return out;
}

// n x n matrices over Z/p, row-major.
Multiply matrix_mod(int n, int p) {
  return [n, p](const Element &a, const Element &b) {
    Element c(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int t = 0; t < n; ++t)
          s += a[static_cast<std::size_t>(i * n + t)] * b[static_cast<std::size_t>(t * n + j)];
        c[static_cast<std::size_t>(i * n + j)] = ((s % p) + p) % p;
      }
    return c;
  };
}

std::vector<Permutation> sl2_regular(int p) {
  return regular_representation({1, 0, 0, 1}, {{1, 1, 0, 1}, {1, 0, 1, 1}}, matrix_mod(2, p));
}

Permutation cycle_of(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<Point>((i + 1) % n);
  return Permutation::from_images0(std::move(images));
}

// PSL(2,7) on the projective line: points 0..6 are field elements, 7 is
// infinity.
std::vector<Permutation> psl27() {
  constexpr int inf = 7;
  std::array<int, 7> inv{};
  for (int x = 1; x < 7; ++x)
    for (int y = 1; y < 7; ++y)
      if (x * y % 7 == 1)
        inv[static_cast<std::size_t>(x)] = y;
  std::vector<Point> shift(8);
  std::vector<Point> flip(8);
  for (int x = 0; x < 7; ++x) {
    shift[static_cast<std::size_t>(x)] = static_cast<Point>((x + 1) % 7);
    flip[static_cast<std::size_t>(x)] =
        static_cast<Point>(x == 0 ? inf : (7 - inv[static_cast<std::size_t>(x)]) % 7);
  }
  shift[inf] = inf;
  flip[inf] = 0;
  return {Permutation::from_images0(shift), Permutation::from_images0(flip)};
}

std::vector<GroupDescriptor> build_corpus() {
  const std::vector<std::string> sol{"soluble"};
  const std::vector<std::string> nil{"soluble", "nilpotent"};
  const std::vector<std::string> insol{"insoluble"};

  std::vector<GroupDescriptor> c;
  c.push_back(make("trivial", 1, {}, 1, nil));
  for (std::size_t n : {2, 3, 4, 5, 6, 12})
    c.push_back(make("C" + std::to_string(n), n, {cycle_of(n)}, n, nil));
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<Point> reflection(n);
    for (std::size_t i = 0; i < n; ++i)
      reflection[i] = static_cast<Point>(n - 1 - i);
    bool nilpotent = (n & (n - 1)) == 0;
    c.push_back(make("D" + std::to_string(2 * n), n,
                     {cycle_of(n), Permutation::from_images0(reflection)}, 2 * n,
                     nilpotent ? nil : sol));
  }
  // Quaternion units inside SL(2,3): i = [[0,-1],[1,0]], j = [[1,1],[1,-1]].
  c.push_back(make("Q8", 8,
                   regular_representation({1, 0, 0, 1}, {{0, 2, 1, 0}, {1, 1, 1, 2}},
                                          matrix_mod(2, 3)),
                   8, nil));
  c.push_back(make("V4", 4, {cyc(4, "(1 2)(3 4)"), cyc(4, "(1 3)(2 4)")}, 4, nil));
  c.push_back(make("S3", 3, {cyc(3, "(1 2)"), cyc(3, "(1 2 3)")}, 6, sol));
  c.push_back(make("S4", 4, {cyc(4, "(1 2)"), cyc(4, "(1 2 3 4)")}, 24, sol));
  c.push_back(make("S5", 5, {cyc(5, "(1 2)"), cyc(5, "(1 2 3 4 5)")}, 120, insol));
  c.push_back(make("A4", 4, {cyc(4, "(1 2 3)"), cyc(4, "(2 3 4)")}, 12, sol));
  c.push_back(make("A5", 5, {cyc(5, "(1 2 3)"), cyc(5, "(1 2 3 4 5)")}, 60, insol));
  c.push_back(make("A6", 6, {cyc(6, "(1 2 3)"), cyc(6, "(2 3 4 5 6)")}, 360, insol));
  // x -> x + 1 and x -> 2x on Z/5, points shifted by one.
  c.push_back(make("F20", 5, {cyc(5, "(1 2 3 4 5)"), cyc(5, "(2 3 5 4)")}, 20, sol));
  c.push_back(make("SL(2,3)", 24, sl2_regular(3), 24, sol));
  c.push_back(make("C3:C4", 7, {cyc(7, "(1 2 3)"), cyc(7, "(2 3)(4 5 6 7)")}, 12, sol));
  // x -> x + 1 and x -> 2x on Z/7.
  c.push_back(make("C7:C3", 7, {cyc(7, "(1 2 3 4 5 6 7)"), cyc(7, "(2 3 5)(4 7 6)")}, 21, sol));
  c.push_back(make("C3xS3", 6, {cyc(6, "(1 2 3)"), cyc(6, "(4 5)"), cyc(6, "(4 5 6)")}, 18, sol));
  c.push_back(make("S3xS3", 6,
                   {cyc(6, "(1 2)"), cyc(6, "(1 2 3)"), cyc(6, "(4 5)"), cyc(6, "(4 5 6)")}, 36,
                   sol));
  c.push_back(make("C3wrC2", 6, {cyc(6, "(1 2 3)"), cyc(6, "(1 4)(2 5)(3 6)")}, 18, sol));
  c.push_back(make("S4xC3", 7, {cyc(7, "(1 2)"), cyc(7, "(1 2 3 4)"), cyc(7, "(5 6 7)")}, 72,
                   sol));
  // Unitriangular 3x3 matrices over Z/3 (extraspecial, exponent 3).
  c.push_back(make("E27", 27,
                   regular_representation({1, 0, 0, 0, 1, 0, 0, 0, 1},
                                          {{1, 1, 0, 0, 1, 0, 0, 0, 1},
                                           {1, 0, 0, 0, 1, 1, 0, 0, 1}},
                                          matrix_mod(3, 3)),
                   27, nil));
  c.push_back(make("SL(2,5)", 120, sl2_regular(5), 120, insol));
  c.push_back(make("PSL(2,7)", 8, psl27(), 168, insol));

  for (auto &d : c) {
    d.source = "builtin";
    if (d.generators.empty())
      d.generators.push_back(Permutation::identity(d.degree));
  }
  return c;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(std::string_view text, const std::string &key,
                               const std::string &what) {
  std::size_t at = text.find("\"" + key + "\"");
  auto [line, column] = line_column(text, at == std::string_view::npos ? 0 : at);
  throw ParseError(what, line, column);
}

} // namespace

bool GroupDescriptor::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

const std::vector<GroupDescriptor> &builtin_corpus() {
  static const std::vector<GroupDescriptor> corpus = build_corpus();
  return corpus;
}

std::optional<GroupDescriptor> find_builtin(std::string_view id) {
  for (const auto &d : builtin_corpus())
    if (d.id == id)
      return d;
  return std::nullopt;
}

GroupDescriptor parse_descriptor(std::string_view text, const std::string &source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at ...: ".
    if (auto pos = what.rfind(": "); pos != std::string::npos)
      what = what.substr(pos + 2);
    throw ParseError(what, line, column);
  }
  if (!doc.is_object())
    throw ParseError("descriptor must be a JSON object", 1, 1);

  GroupDescriptor d;
  d.source = source;
  if (doc.contains("id")) {
    if (!doc["id"].is_string())
      schema_error(text, "id", "\"id\" must be a string");
    d.id = doc["id"].get<std::string>();
  }
  if (!doc.contains("degree") || !doc["degree"].is_number_unsigned() ||
      doc["degree"].get<std::uint64_t>() == 0)
    schema_error(text, "degree", "\"degree\" must be a positive integer");
  d.degree = doc["degree"].get<std::size_t>();

  if (!doc.contains("generators") || !doc["generators"].is_array())
    schema_error(text, "generators", "\"generators\" must be an array");
  for (const auto &g : doc["generators"]) {
    if (g.is_string()) {
      d.generators.push_back(Permutation::from_cycles(g.get<std::string>(), d.degree));
    } else if (g.is_array()) {
      std::vector<std::int64_t> images;
      for (const auto &v : g) {
        if (!v.is_number_integer())
          schema_error(text, "generators", "image arrays must contain integers");
        images.push_back(v.get<std::int64_t>());
      }
      if (images.size() != d.degree)
        throw InvalidPermutation("image array of length " + std::to_string(images.size()) +
                                 " at degree " + std::to_string(d.degree));
      d.generators.push_back(Permutation::from_images(images));
    } else {
      schema_error(text, "generators", "each generator must be an image array or cycle string");
    }
  }
  if (d.generators.empty())
    d.generators.push_back(Permutation::identity(d.degree));

  if (doc.contains("expected_order")) {
    if (!doc["expected_order"].is_number_unsigned())
      schema_error(text, "expected_order", "\"expected_order\" must be a positive integer");
    d.expected_order = doc["expected_order"].get<std::uint64_t>();
  }
  if (doc.contains("tags")) {
    if (!doc["tags"].is_array())
      schema_error(text, "tags", "\"tags\" must be an array of strings");
    for (const auto &t : doc["tags"]) {
      if (!t.is_string())
        schema_error(text, "tags", "\"tags\" must be an array of strings");
      d.tags.push_back(t.get<std::string>());
    }
  }
  return d;
}

std::string write_descriptor(const GroupDescriptor &d) {
  Json doc;
  doc["id"] = d.id;
  doc["degree"] = d.degree;
  Json gens = Json::array();
  for (const auto &g : d.generators)
    gens.push_back(g.images_1based());
  doc["generators"] = gens;
  if (d.expected_order)
    doc["expected_order"] = *d.expected_order;
  doc["tags"] = d.tags;
  return doc.dump(2) + "\n";
}

LoadedGroup load_group(const GroupDescriptor &d) {
  for (const auto &g : d.generators)
    if (g.degree() != d.degree)
      throw DegreeMismatch(d.degree, g.degree());
  PermGroup group(d.degree, d.generators);
  if (d.expected_order && *d.expected_order != group.order())
    throw OrderMismatch(*d.expected_order, group.order());

  auto require = [&](const char *tag, bool actual) {
    if (d.has_tag(tag) && !actual)
      throw GroupError("tag \"" + std::string(tag) + "\" does not hold for group " + d.id);
  };
  if (d.has_tag("soluble") || d.has_tag("insoluble")) {
    bool soluble = is_soluble(group);
    require("soluble", soluble);
    require("insoluble", !soluble);
  }
  if (d.has_tag("nilpotent"))
    require("nilpotent", is_nilpotent(group));
  return {d, group};
}

LoadedGroup load_group(const std::string &path_or_id) {
  if (auto b = find_builtin(path_or_id))
    return load_group(*b);
  std::ifstream in(path_or_id);
  if (!in)
    throw GroupError("no builtin group or readable file named \"" + path_or_id + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  GroupDescriptor d = parse_descriptor(buffer.str(), "file");
  if (d.id.empty())
    d.id = path_or_id;
  return load_group(d);
}

std::vector<GroupDescriptor> select_builtins(const std::string &filter) {
  std::vector<GroupDescriptor> out;
  if (filter.empty() || filter == "all")
    return builtin_corpus();
  if (filter == "soluble" || filter == "insoluble" || filter == "nilpotent") {
    for (const auto &d : builtin_corpus())
      if (d.has_tag(filter))
        out.push_back(d);
    return out;
  }
  std::stringstream ids(filter);
  std::string id;
  while (std::getline(ids, id, ',')) {
    auto d = find_builtin(id);
    if (!d)
      throw GroupError("unknown builtin group \"" + id + "\"");
    out.push_back(*d);
  }
  return out;
}

} // namespace commnil
