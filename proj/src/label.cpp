#include "skewcat/label.hpp"

#include "skewcat/error.hpp"

namespace skewcat {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Label Label::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->text = std::move(name);
  node->hash = mix(1, std::hash<std::string>{}(node->text));
  return Label(std::move(node));
}

Label Label::pair(const Label& a, const Label& b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->parts = {a, b};
  node->hash = mix(mix(2, a.hash()), b.hash());
  return Label(std::move(node));
}

Label Label::inl(const Label& a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Inl;
  node->parts = {a};
  node->hash = mix(3, a.hash());
  return Label(std::move(node));
}

Label Label::inr(const Label& a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Inr;
  node->parts = {a};
  node->hash = mix(4, a.hash());
  return Label(std::move(node));
}

Label Label::fn(std::vector<std::pair<Label, Label>> graph) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Fn;
  node->graph = std::move(graph);
  std::size_t h = 5;
  for (const auto& [x, y] : node->graph) h = mix(mix(h, x.hash()), y.hash());
  node->hash = h;
  return Label(std::move(node));
}

Label Label::cls(const Label& representative) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Cls;
  node->parts = {representative};
  node->hash = mix(6, representative.hash());
  return Label(std::move(node));
}

const std::string& Label::text() const {
  if (node_->kind != Kind::Atom) throw IndexError("label is not an atom: " + str());
  return node_->text;
}

const Label& Label::first() const {
  if (node_->kind != Kind::Pair) throw IndexError("label is not a pair: " + str());
  return node_->parts[0];
}

const Label& Label::second() const {
  if (node_->kind != Kind::Pair) throw IndexError("label is not a pair: " + str());
  return node_->parts[1];
}

const Label& Label::inner() const {
  if (node_->kind == Kind::Inl || node_->kind == Kind::Inr || node_->kind == Kind::Cls)
    return node_->parts[0];
  throw IndexError("label has no inner part: " + str());
}

const std::vector<std::pair<Label, Label>>& Label::graph() const {
  if (node_->kind != Kind::Fn) throw IndexError("label is not a function table: " + str());
  return node_->graph;
}

bool Label::operator==(const Label& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Atom:
      return node_->text == other.node_->text;
    case Kind::Fn: {
      const auto& a = node_->graph;
      const auto& b = other.node_->graph;
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
      return true;
    }
    default: {
      const auto& a = node_->parts;
      const auto& b = other.node_->parts;
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
      return true;
    }
  }
}

std::strong_ordering Label::operator<=>(const Label& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (auto c = node_->kind <=> other.node_->kind; c != 0) return c;
  switch (node_->kind) {
    case Kind::Atom:
      return node_->text <=> other.node_->text;
    case Kind::Fn: {
      const auto& a = node_->graph;
      const auto& b = other.node_->graph;
      std::size_t n = std::min(a.size(), b.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a[i].first <=> b[i].first; c != 0) return c;
        if (auto c = a[i].second <=> b[i].second; c != 0) return c;
      }
      return a.size() <=> b.size();
    }
    default: {
      const auto& a = node_->parts;
      const auto& b = other.node_->parts;
      std::size_t n = std::min(a.size(), b.size());
      for (std::size_t i = 0; i < n; ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
      return a.size() <=> b.size();
    }
  }
}

std::string Label::str() const {
  switch (node_->kind) {
    case Kind::Atom:
      return node_->text;
    case Kind::Pair:
      return "(" + node_->parts[0].str() + "," + node_->parts[1].str() + ")";
    case Kind::Inl:
      return "inl(" + node_->parts[0].str() + ")";
    case Kind::Inr:
      return "inr(" + node_->parts[0].str() + ")";
    case Kind::Fn: {
      std::string out = "fn{";
      bool sep = false;
      for (const auto& [x, y] : node_->graph) {
        if (sep) out += ",";
        out += x.str() + ">" + y.str();
        sep = true;
      }
      return out + "}";
    }
    case Kind::Cls:
      return "[" + node_->parts[0].str() + "]";
  }
  return "?";
}

} // namespace skewcat
