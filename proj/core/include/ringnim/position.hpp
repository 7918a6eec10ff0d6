#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringnim {

using Pile = std::uint32_t;

enum class Variant : std::uint8_t {
  Static,     // CN: emptied piles keep their place on the circle.
  Shrinking,  // SCN: emptied piles vanish and the circle closes up.
};

struct Rules {
  Variant variant = Variant::Shrinking;
  unsigned k = 1;

  static Rules circular(unsigned k) { return {Variant::Static, k}; }
  static Rules shrinking(unsigned k) { return {Variant::Shrinking, k}; }

  friend bool operator==(const Rules&, const Rules&) = default;
};

std::string_view variant_name(Variant v) noexcept;  // "cn" or "scn"

/// A circular sequence of pile sizes. Index 0 is an arbitrary cut point; the
/// last pile is adjacent to the first.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<Pile> piles) : piles_(piles) {}
  explicit Position(std::vector<Pile> piles) : piles_(std::move(piles)) {}
  explicit Position(std::span<const Pile> piles)
      : piles_(piles.begin(), piles.end()) {}

  std::size_t size() const noexcept { return piles_.size(); }
  bool empty() const noexcept { return piles_.empty(); }
  Pile operator[](std::size_t i) const { return piles_[i]; }
  Pile at_circular(std::size_t i) const { return piles_[i % piles_.size()]; }

  std::span<const Pile> piles() const noexcept { return piles_; }
  const std::vector<Pile>& vector() const noexcept { return piles_; }
  auto begin() const noexcept { return piles_.begin(); }
  auto end() const noexcept { return piles_.end(); }

  std::uint64_t total() const noexcept;
  bool all_zero() const noexcept;
  bool all_positive() const noexcept;

  friend bool operator==(const Position&, const Position&) = default;
  friend std::strong_ordering operator<=>(const Position& a,
                                          const Position& b) {
    return a.piles_ <=> b.piles_;
  }

 private:
  std::vector<Pile> piles_;
};

/// Lexicographically smallest of the 2m rotations/reflections.
Position canonicalize(const Position& pos);
void canonicalize_into(std::span<const Pile> piles, std::vector<Pile>& out);
bool is_canonical(std::span<const Pile> piles);

/// Distinct rotations and reflections, sorted ascending.
std::vector<Position> dihedral_orbit(const Position& pos);

/// All 2m images in a fixed order: rotations r = 0..m-1 reading forward,
/// then the same rotations reading backward. Duplicates are kept.
std::vector<Position> dihedral_images(const Position& pos);

// Text form "5,3,1,6,4"; the empty string is the empty position.
Position parse_position(std::string_view text);
std::string format_position(const Position& pos);      // "5,3,1,6,4"
std::string display_position(const Position& pos);     // "(5,3,1,6,4)"
std::ostream& operator<<(std::ostream& os, const Position& pos);

enum class Status : std::uint8_t { P, N };

inline char to_char(Status s) noexcept { return s == Status::P ? 'P' : 'N'; }

}  // namespace ringnim
