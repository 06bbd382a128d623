#include "ilhv/pauli.hpp"

#include <cctype>
#include <sstream>

namespace ilhv {

char letter_char(PauliLetter p) {
  switch (p) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

PauliLetter parse_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I':
    case '_': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default: throw InputError(std::string("not a Pauli letter: '") + c + "'");
  }
}

PauliLetter multiply_letters(PauliLetter a, PauliLetter b, int& phase) {
  // With P = i^(xz) X^x Z^z, moving Z^z1 past X^x2 costs (-1)^(z1 x2).
  const int x1 = x_bit(a), z1 = z_bit(a), x2 = x_bit(b), z2 = z_bit(b);
  const int x3 = x1 ^ x2, z3 = z1 ^ z2;
  phase = (phase + x1 * z1 + x2 * z2 + 2 * z1 * x2 - x3 * z3 + 4) % 4;
  return letter_from_bits(x3, z3);
}

PauliString::PauliString(int phase, LetterMap letters) : letters_(std::move(letters)) {
  set_phase(phase);
  std::erase_if(letters_, [](const auto& kv) { return kv.second == PauliLetter::I; });
}

PauliLetter PauliString::at(const Vertex& v) const {
  const auto it = letters_.find(v);
  return it == letters_.end() ? PauliLetter::I : it->second;
}

void PauliString::set(const Vertex& v, PauliLetter p) {
  if (p == PauliLetter::I) {
    letters_.erase(v);
  } else {
    letters_[v] = p;
  }
}

std::string PauliString::str() const {
  static constexpr const char* kPhase[4] = {"+1", "+i", "-1", "-i"};
  std::string out = kPhase[phase_];
  for (const auto& [v, p] : letters_) {
    out += ' ';
    out += letter_char(p);
    out += '@';
    out += v;
  }
  return out;
}

PauliString PauliString::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  if (!(is >> tok)) throw InputError("empty Pauli string");
  int phase = 0;
  if (tok == "+1" || tok == "+" || tok == "1") {
    phase = 0;
  } else if (tok == "-1" || tok == "-") {
    phase = 2;
  } else if (tok == "+i" || tok == "i") {
    phase = 1;
  } else if (tok == "-i") {
    phase = 3;
  } else {
    throw InputError("bad phase token '" + tok + "'");
  }
  PauliString p;
  p.set_phase(phase);
  while (is >> tok) {
    if (tok.size() < 3 || tok[1] != '@') throw InputError("bad letter token '" + tok + "'");
    const Vertex v = tok.substr(2);
    if (p.letters_.contains(v)) throw InputError("vertex '" + v + "' assigned twice");
    const PauliLetter l = parse_letter(tok[0]);
    if (l != PauliLetter::I) p.letters_[v] = l;
  }
  return p;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  int phase = a.phase() + b.phase();
  PauliString::LetterMap out = a.letters();
  for (const auto& [v, pb] : b.letters()) {
    const auto it = out.find(v);
    const PauliLetter pa = it == out.end() ? PauliLetter::I : it->second;
    const PauliLetter r = multiply_letters(pa, pb, phase);
    if (r == PauliLetter::I) {
      if (it != out.end()) out.erase(it);
    } else {
      out[v] = r;
    }
  }
  return PauliString(phase, std::move(out));
}

bool commutes(const PauliString& a, const PauliString& b) {
  int anti = 0;
  for (const auto& [v, pa] : a.letters()) {
    const PauliLetter pb = b.at(v);
    if (pb != PauliLetter::I && pb != pa) ++anti;
  }
  return anti % 2 == 0;
}

PauliString generator_element(const Graph& g, const Vertex& v) {
  const std::size_t i = g.index_of(v);
  PauliString::LetterMap m;
  m[v] = PauliLetter::X;
  for (std::size_t j : g.neighbors(i)) m[g.label(j)] = PauliLetter::Z;
  return PauliString(0, std::move(m));
}

Letters dense_letters(const Graph& g, const PauliString& p) {
  Letters out(g.size(), PauliLetter::I);
  for (const auto& [v, l] : p.letters()) out[g.index_of(v)] = l;
  return out;
}

PauliString to_pauli_string(const Graph& g, std::span<const PauliLetter> letters, int phase) {
  PauliString::LetterMap m;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] != PauliLetter::I) m[g.label(i)] = letters[i];
  }
  return PauliString(phase, std::move(m));
}

SignedLetters subset_to_letters(const Graph& g, const std::vector<bool>& subset) {
  SignedLetters out;
  out.letters.assign(g.size(), PauliLetter::I);
  int phase = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    const int delta = subset.at(u) ? 1 : 0;
    int t = 0;
    for (std::size_t v : g.neighbors(u)) t += subset[v] ? 1 : 0;
    t %= 4;
    // i^(delta t) X^delta Z^t, rewritten over {I, X, Y, Z}: XZ = -iY.
    phase += delta * t;
    if (delta == 1 && t % 2 == 1) phase += 3;
    out.letters[u] = letter_from_bits(delta == 1, t % 2 == 1);
  }
  out.phase = phase % 4;
  return out;
}

SignedLetters generator_letters(const Graph& g, std::size_t v) {
  SignedLetters out;
  out.letters.assign(g.size(), PauliLetter::I);
  out.letters.at(v) = PauliLetter::X;
  for (std::size_t u : g.neighbors(v)) out.letters[u] = PauliLetter::Z;
  return out;
}

void multiply_in_place(SignedLetters& acc, const SignedLetters& b) {
  if (acc.letters.size() != b.letters.size()) throw InputError("letter strings differ in length");
  int phase = acc.phase + b.phase;
  for (std::size_t i = 0; i < acc.letters.size(); ++i) {
    acc.letters[i] = multiply_letters(acc.letters[i], b.letters[i], phase);
  }
  acc.phase = phase % 4;
}

PauliString subset_to_pauli(const Graph& g, std::span<const Vertex> subset) {
  std::vector<bool> members(g.size(), false);
  for (const Vertex& v : subset) members[g.index_of(v)] = true;
  const SignedLetters s = subset_to_letters(g, members);
  return to_pauli_string(g, s.letters, s.phase);
}

std::optional<StabilizerMatch> match_stabilizer(const Graph& g, std::span<const PauliLetter> letters) {
  if (letters.size() != g.size()) throw InputError("letter string does not cover the graph");
  StabilizerMatch m;
  m.subset.assign(g.size(), false);
  for (std::size_t u = 0; u < g.size(); ++u) m.subset[u] = x_bit(letters[u]);
  for (std::size_t u = 0; u < g.size(); ++u) {
    bool t = false;
    for (std::size_t v : g.neighbors(u)) t ^= m.subset[v];
    if (t != z_bit(letters[u])) return std::nullopt;
  }
  const SignedLetters s = subset_to_letters(g, m.subset);
  m.sign = s.phase == 0 ? 1 : -1;
  return m;
}

std::optional<SubsetDecomposition> pauli_to_subset(const Graph& g, const PauliString& p) {
  const auto m = match_stabilizer(g, dense_letters(g, p));
  if (!m) return std::nullopt;
  SubsetDecomposition out;
  out.sign = m->sign;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (m->subset[u]) out.subset.push_back(g.label(u));
  }
  return out;
}

int expectation(const Graph& g, std::span<const PauliLetter> letters) {
  const auto m = match_stabilizer(g, letters);
  return m ? m->sign : 0;
}

int expectation(const Graph& g, const PauliString& m) { return expectation(g, dense_letters(g, m)); }

}  // namespace ilhv
