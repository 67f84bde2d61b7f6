#include "expg/count.hpp"

#include <stdexcept>

namespace expg {

struct Count::Node {
  enum class Op { kNum, kSum, kProduct, kPower };
  Op op = Op::kNum;
  BigInt num;  // may be negative inside sums
  std::vector<Count> args;
};

namespace {

using Op = Count::Node::Op;
constexpr std::size_t kFoldBits = 64;

std::size_t bit_length(const BigInt& v) {
  return v == 0 ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

// Evaluate with a bit budget; nullopt when the result would exceed it.
std::optional<BigInt> eval(const Count::Node& n, std::size_t max_bits);

}  // namespace

Count::Count(BigInt value) {
  auto node = std::make_shared<Node>();
  node->num = std::move(value);
  node_ = std::move(node);
}

namespace {

std::optional<BigInt> eval_count(const Count& c, std::size_t max_bits) {
  return c.value(max_bits);
}

std::optional<BigInt> eval(const Count::Node& n, std::size_t max_bits) {
  switch (n.op) {
    case Op::kNum:
      if (bit_length(n.num) > max_bits) return std::nullopt;
      return n.num;
    case Op::kSum: {
      BigInt acc = 0;
      for (const auto& a : n.args) {
        auto v = eval_count(a, max_bits + 1);
        if (!v) return std::nullopt;
        acc += *v;
      }
      if (bit_length(acc) > max_bits) return std::nullopt;
      return acc;
    }
    case Op::kProduct: {
      BigInt acc = 1;
      for (const auto& a : n.args) {
        auto v = eval_count(a, max_bits);
        if (!v) return std::nullopt;
        acc *= *v;
        if (bit_length(acc) > max_bits) return std::nullopt;
      }
      return acc;
    }
    case Op::kPower: {
      auto b = eval_count(n.args[0], max_bits);
      auto e = eval_count(n.args[1], 32);
      if (!b || !e) return std::nullopt;
      if (*b <= 1 || *e == 0) return *e == 0 ? BigInt(1) : *b;
      const auto ebits = static_cast<std::size_t>(*e);
      if ((bit_length(*b) - 1) * ebits > max_bits) return std::nullopt;
      BigInt r = boost::multiprecision::pow(*b, static_cast<unsigned>(ebits));
      if (bit_length(r) > max_bits) return std::nullopt;
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<BigInt> Count::value(std::size_t max_bits) const {
  return eval(*node_, max_bits);
}

std::optional<std::uint64_t> Count::to_u64() const {
  auto v = value(64);
  if (!v || *v < 0) return std::nullopt;
  return static_cast<std::uint64_t>(*v);
}

bool Count::is_number() const { return node_->op == Op::kNum; }

namespace {

Count fold(std::shared_ptr<Count::Node> node, auto make) {
  auto v = eval(*node, kFoldBits);
  if (v) return Count(*v);
  return make(std::move(node));
}

// Write v as base^k if possible.
std::optional<Count> as_power_of(const BigInt& v, const BigInt& base) {
  if (base < 2 || v < 1) return std::nullopt;
  BigInt x = v;
  std::uint64_t k = 0;
  while (x % base == 0) {
    x /= base;
    ++k;
  }
  if (x != 1) return std::nullopt;
  return Count(BigInt(k));
}

}  // namespace

Count operator+(const Count& a, const Count& b) {
  auto node = std::make_shared<Count::Node>();
  node->op = Op::kSum;
  for (const Count* c : {&a, &b}) {
    if (c->node_->op == Op::kSum)
      for (const auto& x : c->node_->args) node->args.push_back(x);
    else
      node->args.push_back(*c);
  }
  // merge numeric terms into one trailing constant
  BigInt constant = 0;
  std::vector<Count> rest;
  for (auto& x : node->args) {
    if (x.node_->op == Op::kNum)
      constant += x.node_->num;
    else
      rest.push_back(x);
  }
  if (constant != 0 || rest.empty()) rest.push_back(Count(constant));
  node->args = std::move(rest);
  if (node->args.size() == 1) return node->args[0];
  return fold(node, [](auto n) { return Count(std::shared_ptr<const Count::Node>(n)); });
}

Count operator-(const Count& a, const Count& b) {
  auto v = b.value();
  if (!v) throw std::invalid_argument("cannot subtract a symbolic count");
  return a + Count(BigInt(-*v));
}

Count operator*(const Count& a, const Count& b) {
  const Count* pw = nullptr;
  const Count* other = nullptr;
  if (a.node_->op == Op::kPower) { pw = &a; other = &b; }
  else if (b.node_->op == Op::kPower) { pw = &b; other = &a; }
  if (pw) {
    const Count& base = pw->node_->args[0];
    const Count& ex = pw->node_->args[1];
    // b^e * b^f = b^(e+f)
    if (other->node_->op == Op::kPower &&
        other->node_->args[0] == base)
      return Count::power(base, ex + other->node_->args[1]);
    if (other->node_->op == Op::kNum && base.node_->op == Op::kNum) {
      if (auto k = as_power_of(other->node_->num, base.node_->num))
        return Count::power(base, ex + *k);
    }
  }
  auto node = std::make_shared<Count::Node>();
  node->op = Op::kProduct;
  // constants first for rendering as 3*2^2059
  if (b.node_->op == Op::kNum && a.node_->op != Op::kNum)
    node->args = {b, a};
  else
    node->args = {a, b};
  return fold(node, [](auto n) { return Count(std::shared_ptr<const Count::Node>(n)); });
}

Count Count::power(const Count& base, const Count& exponent) {
  auto node = std::make_shared<Node>();
  node->op = Op::kPower;
  node->args = {base, exponent};
  return fold(node, [](auto n) { return Count(std::shared_ptr<const Node>(n)); });
}

namespace {

std::string render(const Count::Node& n);

bool atomic(const Count& c) { return c.is_number(); }

}  // namespace

std::string Count::str() const { return render(*node_); }

namespace {

std::string render(const Count::Node& n) {
  switch (n.op) {
    case Op::kNum:
      return n.num.str();
    case Op::kSum: {
      std::string s;
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        std::string t = n.args[i].str();
        if (i && t.front() != '-') s += '+';
        s += t;
      }
      return s;
    }
    case Op::kProduct: {
      std::string s;
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        std::string t = n.args[i].str();
        bool wrap = n.args[i].node().op == Op::kSum;
        if (i) s += '*';
        s += wrap ? "(" + t + ")" : t;
      }
      return s;
    }
    case Op::kPower: {
      std::string b = n.args[0].str();
      std::string e = n.args[1].str();
      if (!atomic(n.args[0])) b = "(" + b + ")";
      if (!atomic(n.args[1])) e = "(" + e + ")";
      return b + "^" + e;
    }
  }
  return {};
}

}  // namespace

std::string Count::decimal(std::size_t max_bits) const {
  auto v = value(max_bits);
  return v ? v->str() : str();
}

bool Count::operator==(const Count& other) const {
  if (node_ == other.node_) return true;
  auto a = value(), b = other.value();
  if (a && b) return *a == *b;
  return str() == other.str();
}

}  // namespace expg
