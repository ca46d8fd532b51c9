#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "spectral.hpp"

namespace matchspec {

/// Named constructions. Each maps to a join/union expression; see expand().
enum class FamilyId {
  extremal_join,        // K_s ∨ (K_{n−2s+2k−1} ∪ (s−2k+1)K1)
  extension_isolated,   // K_{2k} ∨ (K_{n−2k−1} ∪ K1)
  extension_triple,     // K_{2k+1} ∨ 3K1
  exclusion_six,        // K2 ∨ (K2 ∪ 2K1)
  exclusion_eight,      // K3 ∨ (K2 ∪ 3K1)
  exclusion_hub,        // K1 ∨ (K2 ∪ K_{n−3})
  exclusion_pendant,    // K_s ∨ (K_{n−2s−1}^+ ∪ sK1)
  exclusion_split,      // K_s ∨ (K2 ∪ K_{n−2s−1} ∪ (s−1)K1)
  exclusion_eleven,     // K4 ∨ (K2^+ ∪ 4K1), an 11-vertex graph
  deficient_hub,        // K1 ∨ (K_{n−3} ∪ 2K1)
  half_join,            // K_{(n−2)/2} ∨ (K2 ∪ ((n−2)/2)K1)
  pendant_pair,         // K2 ∨ (K_{n−5}^+ ∪ 2K1)
};

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::extremal_join,   FamilyId::extension_isolated, FamilyId::extension_triple,
    FamilyId::exclusion_six,   FamilyId::exclusion_eight,    FamilyId::exclusion_hub,
    FamilyId::exclusion_pendant, FamilyId::exclusion_split,  FamilyId::exclusion_eleven,
    FamilyId::deficient_hub,   FamilyId::half_join,          FamilyId::pendant_pair,
};

/// Command-line token for each family.
inline std::string_view family_token(FamilyId id) {
  switch (id) {
    case FamilyId::extremal_join: return "thm11-extremal";
    case FamilyId::extension_isolated: return "thm11-exc1";
    case FamilyId::extension_triple: return "thm11-exc2";
    case FamilyId::exclusion_six: return "thm13-f1";
    case FamilyId::exclusion_eight: return "thm13-f2";
    case FamilyId::exclusion_hub: return "thm13-f3";
    case FamilyId::exclusion_pendant: return "thm13-fact3-pendant";
    case FamilyId::exclusion_split: return "thm13-fact3-split";
    case FamilyId::exclusion_eleven: return "thm13-printed";
    case FamilyId::deficient_hub: return "lem210";
    case FamilyId::half_join: return "w1";
    case FamilyId::pendant_pair: return "w2";
  }
  return "?";
}

inline std::optional<FamilyId> family_from_token(std::string_view token) {
  for (FamilyId id : kAllFamilies)
    if (family_token(id) == token) return id;
  return std::nullopt;
}

/// A family with its parameters; unused parameters stay 0.
struct FamilyRef {
  FamilyId id{};
  int n = 0;
  int k = 0;
  int s = 0;

  friend bool operator==(const FamilyRef&, const FamilyRef&) = default;
};

/// Expression tree for the constructions. Copies of a spec merge their
/// partition blocks by position, so 3K1 and E(3) both give one block.
struct FamilySpec {
  enum class Kind { complete, empty, disjoint, join, pendant_complete, bridged, copies, named };

  Kind kind = Kind::complete;
  int a = 0;  // order; l for pendant_complete; p for bridged; count for copies
  int b = 0;  // q for bridged
  std::vector<FamilySpec> parts;
  FamilyRef ref{};

  static FamilySpec complete(int n) { return {Kind::complete, n, 0, {}, {}}; }
  static FamilySpec empty(int n) { return {Kind::empty, n, 0, {}, {}}; }
  static FamilySpec disjoint(std::vector<FamilySpec> parts) { return {Kind::disjoint, 0, 0, std::move(parts), {}}; }
  static FamilySpec join(FamilySpec l, FamilySpec r) { return {Kind::join, 0, 0, {std::move(l), std::move(r)}, {}}; }
  /// K_{l−1}^+: K_{l−1} plus one pendant vertex.
  static FamilySpec pendant_complete(int l) { return {Kind::pendant_complete, l, 0, {}, {}}; }
  /// K_p + K_q: one edge between a vertex of K_p and a vertex of K_q.
  static FamilySpec bridged(int p, int q) { return {Kind::bridged, p, q, {}, {}}; }
  static FamilySpec copies(int count, FamilySpec of) { return {Kind::copies, count, 0, {std::move(of)}, {}}; }
  static FamilySpec named(FamilyRef r) { return {Kind::named, 0, 0, {}, r}; }
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

inline std::string family_label(const FamilyRef& r) { return std::string(family_token(r.id)); }

}  // namespace detail

/// Throws RangeError unless the parameters are in the family's range.
inline void validate(const FamilyRef& r) {
  using detail::require;
  const std::string name = detail::family_label(r);
  switch (r.id) {
    case FamilyId::extremal_join:
      require(r.k >= 1 && r.s >= 2 * r.k, name + ": needs k >= 1 and s >= 2k");
      require(r.n % 2 == 0 && r.n >= 2 * r.s - 2 * r.k + 2, name + ": needs even n >= 2s-2k+2");
      break;
    case FamilyId::extension_isolated:
      require(r.k >= 1, name + ": needs k >= 1");
      require(r.n % 2 == 0 && r.n >= 2 * r.k + 2, name + ": needs even n >= 2k+2");
      break;
    case FamilyId::extension_triple:
      require(r.k >= 1, name + ": needs k >= 1");
      require(r.n == 0 || r.n == 2 * r.k + 4, name + ": n is fixed at 2k+4");
      break;
    case FamilyId::exclusion_six:
      require(r.n == 0 || r.n == 6, name + ": n is fixed at 6");
      break;
    case FamilyId::exclusion_eight:
      require(r.n == 0 || r.n == 8, name + ": n is fixed at 8");
      break;
    case FamilyId::exclusion_eleven:
      require(r.n == 0 || r.n == 11, name + ": n is fixed at 11");
      break;
    case FamilyId::exclusion_hub:
      require(r.n % 2 == 0 && r.n >= 6, name + ": needs even n >= 6");
      break;
    case FamilyId::exclusion_pendant:
    case FamilyId::exclusion_split:
      require(r.s >= 2, name + ": needs s >= 2");
      require(r.n % 2 == 0 && r.n >= 2 * r.s + 2, name + ": needs even n >= 2s+2");
      break;
    case FamilyId::deficient_hub:
      require(r.n % 2 == 0 && r.n >= 4, name + ": needs even n >= 4");
      break;
    case FamilyId::half_join:
      require(r.n % 2 == 0 && r.n >= 4, name + ": needs even n >= 4");
      break;
    case FamilyId::pendant_pair:
      require(r.n % 2 == 0 && r.n >= 8, name + ": needs even n >= 8");
      break;
  }
}

/// The join/union expression a named family stands for.
inline FamilySpec expand(const FamilyRef& r) {
  validate(r);
  using S = FamilySpec;
  const int n = r.n;
  const int k = r.k;
  const int s = r.s;
  switch (r.id) {
    case FamilyId::extremal_join:
      return S::join(S::complete(s), S::disjoint({S::complete(n - 2 * s + 2 * k - 1), S::empty(s - 2 * k + 1)}));
    case FamilyId::extension_isolated:
      return S::join(S::complete(2 * k), S::disjoint({S::complete(n - 2 * k - 1), S::complete(1)}));
    case FamilyId::extension_triple:
      return S::join(S::complete(2 * k + 1), S::empty(3));
    case FamilyId::exclusion_six:
      return S::join(S::complete(2), S::disjoint({S::complete(2), S::empty(2)}));
    case FamilyId::exclusion_eight:
      return S::join(S::complete(3), S::disjoint({S::complete(2), S::empty(3)}));
    case FamilyId::exclusion_hub:
      return S::join(S::complete(1), S::disjoint({S::complete(2), S::complete(n - 3)}));
    case FamilyId::exclusion_pendant:
      return S::join(S::complete(s), S::disjoint({S::pendant_complete(n - 2 * s), S::empty(s)}));
    case FamilyId::exclusion_split: {
      std::vector<S> parts{S::complete(2), S::complete(n - 2 * s - 1)};
      if (s > 1) parts.push_back(S::empty(s - 1));
      return S::join(S::complete(s), S::disjoint(std::move(parts)));
    }
    case FamilyId::exclusion_eleven:
      return S::join(S::complete(4), S::disjoint({S::pendant_complete(3), S::empty(4)}));
    case FamilyId::deficient_hub:
      return S::join(S::complete(1), S::disjoint({S::complete(n - 3), S::empty(2)}));
    case FamilyId::half_join:
      return S::join(S::complete((n - 2) / 2), S::disjoint({S::complete(2), S::empty((n - 2) / 2)}));
    case FamilyId::pendant_pair:
      return S::join(S::complete(2), S::disjoint({S::pendant_complete(n - 4), S::empty(2)}));
  }
  throw RangeError("unknown family");
}

/// A built graph together with its block partition (blocks laid out in
/// construction order, left operand first).
struct BuiltFamily {
  Graph graph;
  Partition partition;
};

namespace detail {

inline BuiltFamily shift_union(const std::vector<BuiltFamily>& parts) {
  Graph g(0);
  Partition p;
  for (const auto& part : parts) {
    const int offset = g.order();
    g = disjoint_union(g, part.graph);
    for (const auto& b : part.partition.blocks) p.blocks.push_back(VertexSet(b.bits() << offset));
  }
  return {std::move(g), std::move(p)};
}

inline BuiltFamily build_with_blocks(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::complete:
      require(spec.a >= 1, "K(n): needs n >= 1");
      return {complete_graph(spec.a), Partition{{VertexSet::first(spec.a)}}};
    case K::empty:
      require(spec.a >= 1, "E(n): needs n >= 1");
      return {Graph(spec.a), Partition{{VertexSet::first(spec.a)}}};
    case K::pendant_complete: {
      const int l = spec.a;
      require(l >= 2, "pendant complete K_{l-1}^+: needs l >= 2");
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < l - 1; ++i)
        for (int j = i + 1; j < l - 1; ++j) edges.emplace_back(i, j);
      edges.emplace_back(l - 2, l - 1);
      Partition p;
      if (l > 2) p.blocks.push_back(VertexSet::first(l - 2));
      p.blocks.push_back(VertexSet{l - 2});
      p.blocks.push_back(VertexSet{l - 1});
      return {from_edge_list(l, edges), std::move(p)};
    }
    case K::bridged: {
      const int pp = spec.a;
      const int q = spec.b;
      require(pp >= 1 && q >= 1, "K(p)+K(q): needs p, q >= 1");
      Graph g = disjoint_union(complete_graph(pp), complete_graph(q));
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
      edges.emplace_back(pp - 1, pp);
      Partition p;
      if (pp > 1) p.blocks.push_back(VertexSet::first(pp - 1));
      p.blocks.push_back(VertexSet{pp - 1});
      p.blocks.push_back(VertexSet{pp});
      if (q > 1) p.blocks.push_back(VertexSet::first(pp + q) - VertexSet::first(pp + 1));
      return {from_edge_list(pp + q, edges), std::move(p)};
    }
    case K::disjoint: {
      require(!spec.parts.empty(), "union of nothing");
      std::vector<BuiltFamily> parts;
      for (const auto& s : spec.parts) parts.push_back(build_with_blocks(s));
      return shift_union(parts);
    }
    case K::join: {
      require(spec.parts.size() == 2, "join needs two operands");
      auto l = build_with_blocks(spec.parts[0]);
      auto r = build_with_blocks(spec.parts[1]);
      const int offset = l.graph.order();
      Partition p = l.partition;
      for (const auto& b : r.partition.blocks) p.blocks.push_back(VertexSet(b.bits() << offset));
      require(offset + r.graph.order() <= kMaxOrder, "family too large");
      return {matchspec::join(l.graph, r.graph), std::move(p)};
    }
    case K::copies: {
      require(spec.a >= 1 && spec.parts.size() == 1, "copies: needs count >= 1");
      const auto one = build_with_blocks(spec.parts[0]);
      require(one.graph.order() * spec.a <= kMaxOrder, "family too large");
      auto all = shift_union(std::vector<BuiltFamily>(static_cast<std::size_t>(spec.a), one));
      const std::size_t per = one.partition.blocks.size();
      Partition merged;
      merged.blocks.assign(per, VertexSet{});
      for (std::size_t i = 0; i < all.partition.blocks.size(); ++i)
        merged.blocks[i % per] = merged.blocks[i % per] | all.partition.blocks[i];
      return {std::move(all.graph), std::move(merged)};
    }
    case K::named:
      return build_with_blocks(expand(spec.ref));
  }
  throw RangeError("unknown family spec");
}

}  // namespace detail

inline Graph build(const FamilySpec& spec) { return detail::build_with_blocks(spec).graph; }
inline Graph build(const FamilyRef& ref) { return build(FamilySpec::named(ref)); }

/// The block partition of a join/union construction: one block per complete
/// or empty operand, and {K_{l−1}−u, u, v} for a pendant complete (likewise
/// {K_p−u, u, v, K_q−v} for bridged completes). Always equitable.
inline Partition canonical_partition(const FamilySpec& spec) {
  auto built = detail::build_with_blocks(spec);
  if (!quotient_matrix(built.graph, built.partition).equitable)
    throw RangeError("canonical_partition: construction has no equitable block partition");
  return std::move(built.partition);
}
inline Partition canonical_partition(const FamilyRef& ref) { return canonical_partition(FamilySpec::named(ref)); }

/// Order of the named graph.
inline int family_order(const FamilyRef& r) { return build(r).order(); }

/// Every parameter choice of every family that yields an n-vertex graph.
inline std::vector<FamilyRef> registry_instances(int n) {
  std::vector<FamilyRef> out;
  auto try_add = [&](FamilyRef r) {
    try {
      validate(r);
    } catch (const RangeError&) {
      return;
    }
    if (family_order(r) == n) out.push_back(r);
  };
  for (FamilyId id : kAllFamilies) {
    switch (id) {
      case FamilyId::extremal_join:
        for (int k = 1; 2 * k + 2 <= n; ++k)
          for (int s = 2 * k; 2 * s - 2 * k + 2 <= n; ++s) try_add({id, n, k, s});
        break;
      case FamilyId::extension_isolated:
        for (int k = 1; 2 * k + 2 <= n; ++k) try_add({id, n, k, 0});
        break;
      case FamilyId::extension_triple:
        if (n % 2 == 0 && n >= 6) try_add({id, n, (n - 4) / 2, 0});
        break;
      case FamilyId::exclusion_pendant:
      case FamilyId::exclusion_split:
        for (int s = 2; 2 * s + 2 <= n; ++s) try_add({id, n, 0, s});
        break;
      default:
        try_add({id, n, 0, 0});
    }
  }
  return out;
}

/// First candidate whose construction is isomorphic to g.
inline std::optional<FamilyRef> recognize(const Graph& g, const std::vector<FamilyRef>& candidates) {
  for (const auto& c : candidates) {
    Graph built(0);
    try {
      built = build(c);
    } catch (const RangeError&) {
      continue;
    }
    if (are_isomorphic(g, built)) return c;
  }
  return std::nullopt;
}

/// "thm11-exc1:n=6,k=1" style name with the parameters the family uses.
inline std::string to_string(const FamilyRef& r) {
  std::string out(family_token(r.id));
  std::vector<std::string> params;
  if (r.n != 0) params.push_back("n=" + std::to_string(r.n));
  if (r.k != 0) params.push_back("k=" + std::to_string(r.k));
  if (r.s != 0) params.push_back("s=" + std::to_string(r.s));
  for (std::size_t i = 0; i < params.size(); ++i) out += (i == 0 ? ":" : ",") + params[i];
  return out;
}

/// Expression text accepted by parse_family_spec.
inline std::string to_string(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  auto wrapped = [](const FamilySpec& s) {
    const bool compound = s.kind == K::disjoint || s.kind == K::join;
    return compound ? "(" + to_string(s) + ")" : to_string(s);
  };
  switch (spec.kind) {
    case K::complete: return "K" + std::to_string(spec.a);
    case K::empty: return spec.a == 1 ? "K1" : std::to_string(spec.a) + "K1";
    case K::pendant_complete: return "K" + std::to_string(spec.a - 1) + "^+";
    case K::bridged: return "K" + std::to_string(spec.a) + "+K" + std::to_string(spec.b);
    case K::copies: return std::to_string(spec.a) + wrapped(spec.parts[0]);
    case K::named: return to_string(spec.ref);
    case K::disjoint: {
      std::string out;
      for (std::size_t i = 0; i < spec.parts.size(); ++i)
        out += (i ? " u " : "") + (spec.parts[i].kind == K::join ? wrapped(spec.parts[i]) : to_string(spec.parts[i]));
      return out;
    }
    case K::join: {
      return to_string(spec.parts[0]) + " v " + wrapped(spec.parts[1]);
    }
  }
  return "?";
}

inline std::string describe(const FamilyRef& r) { return to_string(expand(r)); }

namespace detail {

// Recursive-descent parser for the family grammar (see docs/family-grammar.md).
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  FamilySpec parse() {
    auto spec = parse_join();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("family spec at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_operator(char op) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != op) return false;
    if (op == '+') return pos_ + 1 >= s_.size() || s_[pos_ + 1] != '+';
    return true;
  }

  FamilySpec parse_join() {
    FamilySpec left = parse_union();
    while (peek_operator('v')) {
      ++pos_;
      left = FamilySpec::join(std::move(left), parse_union());
    }
    return left;
  }

  FamilySpec parse_union() {
    std::vector<FamilySpec> parts{parse_bridge()};
    while (peek_operator('u')) {
      ++pos_;
      parts.push_back(parse_bridge());
    }
    return parts.size() == 1 ? std::move(parts[0]) : FamilySpec::disjoint(std::move(parts));
  }

  FamilySpec parse_bridge() {
    FamilySpec left = parse_term();
    if (!peek_operator('+')) return left;
    ++pos_;
    FamilySpec right = parse_term();
    if (left.kind != FamilySpec::Kind::complete || right.kind != FamilySpec::Kind::complete)
      fail("'+' joins two complete graphs, e.g. K(3)+K(5)");
    return FamilySpec::bridged(left.a, right.a);
  }

  std::optional<int> integer() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + (s_[pos_] - '0');
      if (value > kMaxOrder) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return static_cast<int>(value);
  }

  int expect_integer() {
    auto v = integer();
    if (!v) fail("expected a number");
    return *v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int parenthesized_integer() {
    expect('(');
    const int v = expect_integer();
    expect(')');
    return v;
  }

  FamilySpec parse_term() {
    const auto count = integer();
    FamilySpec atom = parse_atom();
    skip_ws();
    if (s_.substr(pos_).starts_with("^+")) {
      pos_ += 2;
      if (atom.kind != FamilySpec::Kind::complete) fail("'^+' applies to a complete graph");
      atom = FamilySpec::pendant_complete(atom.a + 1);
    }
    if (count) {
      if (*count < 1) fail("copy count must be >= 1");
      if (*count == 1) return atom;
      if (atom.kind == FamilySpec::Kind::complete && atom.a == 1) return FamilySpec::empty(*count);
      return FamilySpec::copies(*count, std::move(atom));
    }
    return atom;
  }

  FamilySpec parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = parse_join();
      expect(')');
      return inner;
    }
    if (c == 'K') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == 's') ++pos_;
      skip_ws();
      const int n = (pos_ < s_.size() && s_[pos_] == '(') ? parenthesized_integer() : expect_integer();
      if (n < 1) fail("K(n) needs n >= 1");
      return FamilySpec::complete(n);
    }
    if (c == 'E') {
      ++pos_;
      const int n = parenthesized_integer();
      if (n < 1) fail("E(n) needs n >= 1");
      return FamilySpec::empty(n);
    }
    if (std::islower(static_cast<unsigned char>(c)) && c != 'u' && c != 'v') return parse_named();
    fail("expected K, E, '(' or a family name");
  }

  FamilySpec parse_named() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-'))
      ++pos_;
    const auto token = s_.substr(start, pos_ - start);
    const auto id = family_from_token(token);
    if (!id) fail("unknown family '" + std::string(token) + "'");
    FamilyRef ref{*id, 0, 0, 0};
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ':') {
      ++pos_;
      do {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected a parameter");
        const char key = s_[pos_++];
        expect('=');
        const int value = expect_integer();
        switch (key) {
          case 'n': ref.n = value; break;
          case 'k': ref.k = value; break;
          case 's': ref.s = value; break;
          default: fail(std::string("unknown parameter '") + key + "'");
        }
        skip_ws();
      } while (pos_ < s_.size() && s_[pos_] == ',' && ++pos_);
    }
    if (ref.id == FamilyId::extension_triple && ref.k == 0 && ref.n != 0 && ref.n % 2 == 0) ref.k = (ref.n - 4) / 2;
    validate(ref);
    return FamilySpec::named(ref);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse family text such as "Ks(3) v (K(2) u 3K1)", "K(3)+K(5)" or
/// "w2:n=10". Range errors in named families surface as RangeError.
inline FamilySpec parse_family_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

}  // namespace matchspec
