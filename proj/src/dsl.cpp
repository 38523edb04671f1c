#include "jordan/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "jordan/bounds.hpp"

namespace jordan::dsl {

namespace {

constexpr std::uint64_t kMaxDimension = 1000000;
constexpr std::uint64_t kMaxMatrixSize = 128;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

struct Leaf {
  NodeKind kind;
  std::string_view name;
};

constexpr std::array<Leaf, 12> kNames{{
    {NodeKind::torus, "torus"},
    {NodeKind::unipotent, "unipotent"},
    {NodeKind::abelian_variety, "abelian_variety"},
    {NodeKind::finite, "finite"},
    {NodeKind::gl, "gl"},
    {NodeKind::gl_q, "gl_q"},
    {NodeKind::semisimple, "semisimple"},
    {NodeKind::connected, "connected"},
    {NodeKind::aut0, "aut0"},
    {NodeKind::bir_connected, "bir_connected"},
    {NodeKind::product, "product"},
    {NodeKind::extension, "extension"},
}};

class Parser {
 public:
  Parser(std::string_view text, Caps const& caps) : text_(text), caps_(caps) {}

  GroupExpr run() {
    auto e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected text after the expression");
    return e;
  }

 private:
  [[noreturn]] void fail(std::string const& message) const { fail_at(message, pos_); }

  [[noreturn]] void fail_at(std::string const& message, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, at, line, column);
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but the input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string_view identifier() {
    skip();
    auto start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) {
      if (pos_ >= text_.size()) fail("expected a name but the input ended");
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number(std::uint64_t lo, std::uint64_t hi, std::string_view what) {
    skip();
    auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer for " + std::string(what));
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || v < lo || v > hi)
      fail_at(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", start);
    return v;
  }

  Isogeny isogeny() {
    auto at = pos_;
    auto word = identifier();
    if (word == "sc") return Isogeny::sc;
    if (word == "adjoint") return Isogeny::adjoint;
    fail_at("isogeny must be sc or adjoint, got '" + std::string(word) + "'", at);
  }

  GroupExpr expr() {
    skip();
    auto at = pos_;
    auto word = identifier();
    GroupExpr e;
    auto it = std::find_if(kNames.begin(), kNames.end(), [&](Leaf const& l) { return l.name == word; });
    if (it == kNames.end()) fail_at("unknown group kind '" + std::string(word) + "'", at);
    e.kind = it->kind;
    expect('(');
    switch (e.kind) {
      case NodeKind::torus: e.param = number(0, kMaxDimension, "torus rank"); break;
      case NodeKind::unipotent: e.param = number(0, kMaxDimension, "unipotent dimension"); break;
      case NodeKind::abelian_variety: e.param = number(0, kMaxDimension, "abelian variety dimension"); break;
      case NodeKind::finite: e.param = number(1, kMaxOrder, "finite group order"); break;
      case NodeKind::gl: e.param = number(0, kMaxMatrixSize, "matrix size"); break;
      case NodeKind::gl_q: e.param = number(1, kMaxMatrixSize, "matrix size"); break;
      case NodeKind::connected:
        e.param = number(0, static_cast<std::uint64_t>(caps_.enumeration_dim), "connected group dimension");
        break;
      case NodeKind::aut0:
      case NodeKind::bir_connected: {
        std::uint64_t hi = 0;
        while (4 * (hi + 1) * (hi + 1) <= static_cast<std::uint64_t>(caps_.enumeration_dim)) ++hi;
        e.param = number(1, hi, "variety dimension (4n^2 within the enumeration cap)");
        break;
      }
      case NodeKind::semisimple: semisimple_args(e); break;
      case NodeKind::product:
        e.children.push_back(expr());
        do {
          expect(',');
          e.children.push_back(expr());
        } while (!peek(')'));
        break;
      case NodeKind::extension:
        e.children.push_back(expr());
        expect(',');
        e.children.push_back(expr());
        break;
    }
    if (e.kind != NodeKind::product && !peek(')')) {
      if (peek(',')) fail("too many arguments for " + std::string(word));
    }
    expect(')');
    if (e.kind == NodeKind::product || e.kind == NodeKind::extension || e.kind == NodeKind::semisimple) e.param = 0;
    return e;
  }

  void semisimple_args(GroupExpr& e) {
    expect('[');
    do {
      skip();
      auto at = pos_;
      auto word = identifier();
      try {
        e.types.push_back(roots::SimpleType::parse(word));
      } catch (InvalidArgument const& err) {
        fail_at(err.what(), at);
      }
      if (static_cast<std::int64_t>(e.types.size()) > 64) fail_at("too many simple factors", at);
    } while (peek(',') && (++pos_, true));
    expect(']');
    expect(',');
    if (peek('[')) {
      auto at = pos_;
      ++pos_;
      do e.isogeny.push_back(isogeny());
      while (peek(',') && (++pos_, true));
      expect(']');
      if (e.isogeny.size() != e.types.size())
        fail_at("isogeny list has " + std::to_string(e.isogeny.size()) + " entries for " +
                    std::to_string(e.types.size()) + " factors",
                at);
    } else {
      e.isogeny.assign(e.types.size(), isogeny());
    }
  }

  std::string_view text_;
  Caps const& caps_;
  std::size_t pos_ = 0;
};

char const* isogeny_name(Isogeny i) { return i == Isogeny::sc ? "sc" : "adjoint"; }

Derivation eval(GroupExpr const& e, Caps const& caps, std::string const& path) {
  using bounds::LeafKind;
  auto here = path + "/" + std::string(kind_name(e.kind));
  try {
    BigInt p(static_cast<unsigned long>(e.param));
    switch (e.kind) {
      case NodeKind::torus: return bounds::leaf_triple(LeafKind::torus, p, caps);
      case NodeKind::unipotent: return bounds::leaf_triple(LeafKind::unipotent, p, caps);
      case NodeKind::abelian_variety: return bounds::leaf_triple(LeafKind::abelian_variety, p, caps);
      case NodeKind::finite: return bounds::leaf_triple(LeafKind::finite, p, caps);
      case NodeKind::gl: return bounds::leaf_triple(LeafKind::gl_field, p, caps);
      case NodeKind::gl_q: return bounds::leaf_triple(LeafKind::gl_rational, p, caps);
      case NodeKind::semisimple: return bounds::leaf_semisimple(isogeny_class(e), caps);
      case NodeKind::connected: return bounds::j_connected(static_cast<int>(e.param), caps);
      case NodeKind::aut0:
      case NodeKind::bir_connected: return bounds::j_aut0(static_cast<int>(e.param), caps);
      case NodeKind::product: {
        if (e.children.size() < 2) throw InvalidArgument("product needs at least two factors");
        auto acc = eval(e.children[0], caps, here + "[0]");
        for (std::size_t i = 1; i < e.children.size(); ++i)
          acc = bounds::combine_product(acc, eval(e.children[i], caps, here + "[" + std::to_string(i) + "]"));
        return acc;
      }
      case NodeKind::extension:
        if (e.children.size() != 2) throw InvalidArgument("extension needs a normal subgroup and a quotient");
        return bounds::combine_extension(eval(e.children[0], caps, here + "[0]"), eval(e.children[1], caps, here + "[1]"));
    }
  } catch (CapExceeded const& err) {
    if (err.detail().find(" at /") != std::string::npos) throw;  // already located deeper down
    throw CapExceeded(err.module(), err.detail() + " at " + here, err.lower_bound());
  }
  throw Error("unhandled node kind");
}

}  // namespace

ParseError::ParseError(std::string const& message, std::size_t offset, std::size_t line, std::size_t column)
    : InvalidArgument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      offset_(offset),
      line_(line),
      column_(column) {}

GroupExpr parse(std::string_view text, Caps const& caps) { return Parser(text, caps).run(); }

std::string_view kind_name(NodeKind kind) {
  for (auto const& l : kNames)
    if (l.kind == kind) return l.name;
  return "?";
}

std::string print(GroupExpr const& e) {
  std::string s(kind_name(e.kind));
  s += "(";
  switch (e.kind) {
    case NodeKind::product:
    case NodeKind::extension:
      for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? ", " : "") + print(e.children[i]);
      break;
    case NodeKind::semisimple: {
      s += "[";
      for (std::size_t i = 0; i < e.types.size(); ++i) s += (i ? ", " : "") + e.types[i].name();
      s += "], ";
      bool uniform = std::all_of(e.isogeny.begin(), e.isogeny.end(), [&](Isogeny i) { return i == e.isogeny.front(); });
      if (uniform && !e.isogeny.empty()) {
        s += isogeny_name(e.isogeny.front());
      } else {
        s += "[";
        for (std::size_t i = 0; i < e.isogeny.size(); ++i) s += std::string(i ? ", " : "") + isogeny_name(e.isogeny[i]);
        s += "]";
      }
      break;
    }
    default: s += std::to_string(e.param);
  }
  return s + ")";
}

semisimple::IsogenyClass isogeny_class(GroupExpr const& leaf) {
  if (leaf.kind != NodeKind::semisimple || leaf.types.empty() || leaf.isogeny.size() != leaf.types.size())
    throw InvalidArgument("not a semisimple leaf");
  // SemisimpleType sorts its factors, so build the kernel factor by factor
  // against the sorted order.
  std::vector<std::pair<roots::SimpleType, Isogeny>> pairs;
  for (std::size_t i = 0; i < leaf.types.size(); ++i) pairs.emplace_back(leaf.types[i], leaf.isogeny[i]);
  std::sort(pairs.begin(), pairs.end());
  semisimple::SemisimpleType base(leaf.types);
  auto z = base.center();
  auto offsets = base.component_offsets();
  std::vector<Element> kernel;
  for (std::size_t f = 0; f < pairs.size(); ++f)
    if (pairs[f].second == Isogeny::adjoint)
      for (auto c = offsets[f]; c < offsets[f + 1]; ++c) {
        Element g = z.zero();
        g[c] = 1;
        kernel.push_back(std::move(g));
      }
  return {base, kernel};
}

Derivation evaluate(GroupExpr const& e, Caps const& caps) { return eval(e, caps, ""); }

}  // namespace jordan::dsl
