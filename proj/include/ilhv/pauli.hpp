#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ilhv/graph.hpp"

namespace ilhv {

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component,
/// so Y carries both (Y = i X Z).
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline constexpr bool x_bit(PauliLetter p) { return (static_cast<unsigned>(p) & 1u) != 0; }
inline constexpr bool z_bit(PauliLetter p) { return (static_cast<unsigned>(p) & 2u) != 0; }
inline constexpr PauliLetter letter_from_bits(bool x, bool z) {
  return static_cast<PauliLetter>((x ? 1u : 0u) | (z ? 2u : 0u));
}

char letter_char(PauliLetter p);
/// Accepts I, X, Y, Z (case-insensitive) and '_' for the identity.
PauliLetter parse_letter(char c);

/// Product of two letters: returns the letter, adds the i-exponent of the
/// scalar byproduct to `phase` (mod 4).
PauliLetter multiply_letters(PauliLetter a, PauliLetter b, int& phase);

/// Dense letter assignment indexed by a graph's canonical vertex order.
using Letters = std::vector<PauliLetter>;

struct VertexLess {
  bool operator()(const Vertex& a, const Vertex& b) const { return vertex_less(a, b); }
};

/// i^phase times a tensor product of letters; absent vertices carry I.
class PauliString {
 public:
  using LetterMap = std::map<Vertex, PauliLetter, VertexLess>;

  PauliString() = default;
  PauliString(int phase, LetterMap letters);

  int phase() const { return phase_; }
  const LetterMap& letters() const { return letters_; }
  PauliLetter at(const Vertex& v) const;
  void set(const Vertex& v, PauliLetter p);
  void set_phase(int phase) { phase_ = ((phase % 4) + 4) % 4; }

  /// True when every letter is I, regardless of phase.
  bool identity_letters() const { return letters_.empty(); }
  /// Number of non-identity letters.
  std::size_t weight() const { return letters_.size(); }

  /// Text form: phase token (+1, -1, +i, -i) then letter@vertex tokens.
  std::string str() const;
  static PauliString parse(std::string_view text);

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int phase_ = 0;
  LetterMap letters_;
};

PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }
bool commutes(const PauliString& a, const PauliString& b);

/// X on `v`, Z on each neighbour.
PauliString generator_element(const Graph& g, const Vertex& v);

/// Dense conversions. `dense_letters` throws InputError for letters on unknown vertices.
Letters dense_letters(const Graph& g, const PauliString& p);
PauliString to_pauli_string(const Graph& g, std::span<const PauliLetter> letters, int phase = 0);

/// Stabilizer element prod_{u in U} g_u written as a signed Pauli product,
/// using the local rule chi_u sigma_u = i^(delta_u t_u) X^delta_u Z^t_u with
/// t_u the number of neighbours in U (mod 4).
struct SignedLetters {
  int phase = 0;
  Letters letters;
};
SignedLetters subset_to_letters(const Graph& g, const std::vector<bool>& subset);
SignedLetters generator_letters(const Graph& g, std::size_t v);
/// acc <- acc * b, letters of equal length.
void multiply_in_place(SignedLetters& acc, const SignedLetters& b);
PauliString subset_to_pauli(const Graph& g, std::span<const Vertex> subset);

/// Decomposition of a bare Pauli product into generators: the subset U and
/// the sign chi with prod_{u in U} g_u = chi * P.
struct StabilizerMatch {
  std::vector<bool> subset;
  int sign = 1;
};

/// Inverse of subset_to_letters. U is read off the X components; the Z
/// components must then equal the neighbour parities, otherwise nullopt.
std::optional<StabilizerMatch> match_stabilizer(const Graph& g, std::span<const PauliLetter> letters);

struct SubsetDecomposition {
  std::vector<Vertex> subset;
  int sign = 1;
};
/// Phase of `p` is ignored. Throws InputError for letters on unknown vertices.
std::optional<SubsetDecomposition> pauli_to_subset(const Graph& g, const PauliString& p);

/// Graph-state expectation of a Pauli measurement: the stabilizer sign, or 0.
int expectation(const Graph& g, std::span<const PauliLetter> letters);
int expectation(const Graph& g, const PauliString& m);

}  // namespace ilhv
