#include "ringnim/position.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "ringnim/error.hpp"

namespace ringnim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidWindow: return "invalid-window";
    case ErrorCode::InvalidRemoval: return "invalid-removal";
    case ErrorCode::TerminalPosition: return "terminal-position";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::WrongLength: return "wrong-length";
    case ErrorCode::NonpositivePile: return "nonpositive-pile";
    case ErrorCode::UnknownClassifier: return "unknown-classifier";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::InvalidPosition: return "invalid-position";
  }
  return "unknown";
}

std::string_view variant_name(Variant v) noexcept {
  return v == Variant::Static ? "cn" : "scn";
}

std::uint64_t Position::total() const noexcept {
  return std::accumulate(piles_.begin(), piles_.end(), std::uint64_t{0});
}

bool Position::all_zero() const noexcept {
  return std::all_of(piles_.begin(), piles_.end(),
                     [](Pile p) { return p == 0; });
}

bool Position::all_positive() const noexcept {
  return std::all_of(piles_.begin(), piles_.end(),
                     [](Pile p) { return p > 0; });
}

namespace {

// Reads image (start, dir) at offset i without materializing it.
struct ImageView {
  std::span<const Pile> piles;
  std::size_t start;
  bool reversed;

  Pile operator[](std::size_t i) const {
    const std::size_t m = piles.size();
    return reversed ? piles[(start + m - (i % m)) % m]
                    : piles[(start + i) % m];
  }
};

// Returns true when image a is strictly smaller than image b.
bool image_less(const ImageView& a, const ImageView& b) {
  const std::size_t m = a.piles.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Pile x = a[i];
    const Pile y = b[i];
    if (x != y) return x < y;
  }
  return false;
}

ImageView smallest_image(std::span<const Pile> piles) {
  ImageView best{piles, 0, false};
  const std::size_t m = piles.size();
  if (m == 0) return best;
  const Pile lo = *std::min_element(piles.begin(), piles.end());
  bool first = true;
  for (std::size_t s = 0; s < m; ++s) {
    if (piles[s] != lo) continue;
    for (bool rev : {false, true}) {
      ImageView cand{piles, s, rev};
      if (first || image_less(cand, best)) {
        best = cand;
        first = false;
      }
    }
  }
  return best;
}

}  // namespace

void canonicalize_into(std::span<const Pile> piles, std::vector<Pile>& out) {
  const ImageView best = smallest_image(piles);
  out.resize(piles.size());
  for (std::size_t i = 0; i < piles.size(); ++i) out[i] = best[i];
}

bool is_canonical(std::span<const Pile> piles) {
  const ImageView best = smallest_image(piles);
  const ImageView self{piles, 0, false};
  return !image_less(best, self);
}

Position canonicalize(const Position& pos) {
  std::vector<Pile> out;
  canonicalize_into(pos.piles(), out);
  return Position(std::move(out));
}

std::vector<Position> dihedral_images(const Position& pos) {
  std::vector<Position> images;
  const std::size_t m = pos.size();
  if (m == 0) {
    images.emplace_back();
    return images;
  }
  images.reserve(2 * m);
  for (bool rev : {false, true}) {
    for (std::size_t s = 0; s < m; ++s) {
      ImageView view{pos.piles(), s, rev};
      std::vector<Pile> image(m);
      for (std::size_t i = 0; i < m; ++i) image[i] = view[i];
      images.emplace_back(std::move(image));
    }
  }
  return images;
}

std::vector<Position> dihedral_orbit(const Position& pos) {
  std::vector<Position> images = dihedral_images(pos);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

Position parse_position(std::string_view text) {
  std::vector<Pile> piles;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) return Position{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                             : comma - pos));
    std::uint64_t value = 0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size() ||
        value > std::numeric_limits<Pile>::max()) {
      throw GameError(ErrorCode::ParseError,
                      "bad pile size '" + std::string(field) + "'");
    }
    piles.push_back(static_cast<Pile>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Position(std::move(piles));
}

std::string format_position(const Position& pos) {
  std::string out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pos[i]);
  }
  return out;
}

std::string display_position(const Position& pos) {
  return "(" + format_position(pos) + ")";
}

std::ostream& operator<<(std::ostream& os, const Position& pos) {
  return os << display_position(pos);
}

}  // namespace ringnim
