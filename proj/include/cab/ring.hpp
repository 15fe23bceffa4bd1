#ifndef CAB_RING_HPP
#define CAB_RING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cab {

struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_argument_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Named coordinate ring over Q.  Immutable after construction.
class RingContext {
public:
  explicit RingContext(std::vector<std::string> vars);
  RingContext(std::vector<std::string> vars,
              std::vector<std::pair<std::string, std::vector<std::string>>> blocks);

  static std::shared_ptr<const RingContext> make(std::vector<std::string> vars);
  static std::shared_ptr<const RingContext>
  make(std::vector<std::string> vars,
       std::vector<std::pair<std::string, std::vector<std::string>>> blocks);

  std::size_t nvars() const { return vars_.size(); }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  const std::vector<std::string>& var_names() const { return vars_; }
  // -1 if unknown
  int var_index(const std::string& name) const;

  bool has_blocks() const { return !blocks_.empty(); }
  const std::vector<std::pair<std::string, std::vector<std::string>>>& blocks() const {
    return blocks_;
  }
  // indices of a named block; throws if absent
  std::vector<int> block_indices(const std::string& name) const;

private:
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
  std::vector<std::pair<std::string, std::vector<std::string>>> blocks_;
};

using RingPtr = std::shared_ptr<const RingContext>;

/// Exponent vector with cached total degree.
class Monomial {
public:
  Monomial() : deg_(0) {}
  explicit Monomial(std::size_t n) : e_(n, 0), deg_(0) {}
  explicit Monomial(std::vector<uint32_t> e);

  std::size_t size() const { return e_.size(); }
  uint32_t operator[](std::size_t i) const { return e_[i]; }
  uint32_t degree() const { return deg_; }
  const std::vector<uint32_t>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, uint32_t v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
  }

  Monomial operator*(const Monomial& o) const;
  // componentwise a - b; caller must check divisibility
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
  std::vector<uint32_t> e_;
  uint32_t deg_;
};

/// Lex, GrevLex, or a two-block elimination order (GrevLex within each block).
class MonomialOrder {
public:
  enum class Kind { Lex, GrevLex, Block };

  MonomialOrder() : kind_(Kind::GrevLex) {}
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, {}); }
  // front: indices of the eliminated block
  static MonomialOrder block_elim(std::vector<int> front, std::size_t nvars);

  Kind kind() const { return kind_; }
  const std::vector<int>& front() const { return front_; }
  const std::vector<int>& back() const { return back_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && front_ == o.front_;
  }
  std::string key() const;

private:
  MonomialOrder(Kind k, std::vector<int> front) : kind_(k), front_(std::move(front)) {}
  Kind kind_;
  std::vector<int> front_;
  std::vector<int> back_;
};

} // namespace cab

#endif
