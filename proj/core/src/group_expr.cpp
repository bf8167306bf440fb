#include <cctype>
#include <functional>
#include <sstream>

#include "picard/exactring.hpp"
#include "picard/fpgroups.hpp"

namespace picard {

namespace {

// Recursive-descent parser shared by the named-generator expressions and
// the single-letter presentation format. `read_letter` consumes one
// generator token at `pos` and returns its letter, or 0 if none starts there.
class WordParser {
 public:
  using LetterReader = std::function<Letter(std::string_view, std::size_t&)>;

  WordParser(std::string_view text, LetterReader read) : s_(text), read_(std::move(read)) {}

  Word parse() {
    Word w = sequence('\0');
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return free_reduce(w);
  }

 private:
  Word sequence(char stop) {
    Word out;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) {
        if (stop != '\0') fail(std::string("missing '") + stop + "'");
        return out;
      }
      const char c = s_[pos_];
      if (c == stop || c == ')' || c == ']' || c == ',') return out;
      Word atom;
      if (c == '(') {
        ++pos_;
        atom = sequence(')');
        expect(')');
      } else if (c == '[') {
        ++pos_;
        Word u = sequence(',');
        expect(',');
        Word v = sequence(']');
        expect(']');
        atom = concat(concat(inverse_word(u), inverse_word(v)), concat(u, v));
      } else if (c == '1' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
        ++pos_;  // explicit identity
      } else {
        const Letter l = read_(s_, pos_);
        if (l == 0) fail("unknown generator at '" + std::string(s_.substr(pos_)) + "'");
        atom = {l};
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        atom = power(atom, exponent());
      }
      out.insert(out.end(), atom.begin(), atom.end());
    }
  }

  long exponent() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("missing exponent");
    long n = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -n : n;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in word '" + std::string(s_) + "'");
  }

  std::string_view s_;
  LetterReader read_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view expr, const std::vector<std::string>& names) {
  auto reader = [&names](std::string_view s, std::size_t& pos) -> Letter {
    // Longest generator name that is a prefix of the remaining text.
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < names.size(); ++g) {
      const auto& n = names[g];
      if (n.size() > best_len && s.substr(pos, n.size()) == n) {
        best = static_cast<int>(g);
        best_len = n.size();
      }
    }
    if (best < 0) return 0;
    pos += best_len;
    return gen_letter(best);
  };
  return WordParser(expr, reader).parse();
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i);
    const long e = letter_is_inverse(w[i]) ? -run : run;
    os << (first ? "" : " ") << names.at(static_cast<std::size_t>(letter_gen(w[i])));
    if (e != 1) os << "^" << e;
    first = false;
    i = j;
  }
  return os.str();
}

Presentation parse_presentation(std::string_view text, std::string name) {
  std::vector<std::string> gens;
  std::vector<std::string> lines;
  bool saw_directive = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line.rfind("gens:", 0) == 0) {
      if (saw_directive || !lines.empty()) throw ParseError("'gens:' must be the first directive");
      saw_directive = true;
      std::istringstream gs(line.substr(5));
      std::string g;
      while (gs >> g) {
        if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0]))) {
          throw ParseError("generator names must be single lowercase letters, got '" + g + "'");
        }
        gens.push_back(g);
      }
      continue;
    }
    lines.push_back(line);
  }
  if (!saw_directive) {
    char max_letter = 0;
    for (const auto& l : lines)
      for (char c : l)
        if (std::isalpha(static_cast<unsigned char>(c)))
          max_letter = std::max(max_letter, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (char c = 'a'; max_letter != 0 && c <= max_letter; ++c) gens.emplace_back(1, c);
  }
  auto reader = [&gens](std::string_view s, std::size_t& pos) -> Letter {
    const char c = s[pos];
    if (!std::isalpha(static_cast<unsigned char>(c))) return 0;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g][0] == lower) {
        ++pos;
        return gen_letter(static_cast<int>(g), std::isupper(static_cast<unsigned char>(c)) != 0);
      }
    }
    return 0;
  };
  std::vector<Word> rels;
  for (const auto& l : lines) rels.push_back(WordParser(l, reader).parse());
  return Presentation(std::move(gens), std::move(rels), std::move(name));
}

std::string render_presentation(const Presentation& p) {
  const auto& names = p.generator_names();
  bool letters = true;
  for (const auto& n : names)
    if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0]))) letters = false;
  if (!letters && names.size() > 26) throw std::invalid_argument("too many generators for the letter format");

  std::vector<char> sym;
  for (std::size_t g = 0; g < names.size(); ++g) sym.push_back(letters ? names[g][0] : static_cast<char>('a' + g));

  std::ostringstream os;
  if (!p.name().empty()) os << "# " << p.name() << "\n";
  if (!letters) {
    os << "#";
    for (std::size_t g = 0; g < names.size(); ++g) os << " " << sym[g] << " = " << names[g] << (g + 1 < names.size() ? "," : "");
    os << "\n";
  }
  os << "gens:";
  for (char c : sym) os << " " << c;
  os << "\n";
  for (const auto& r : p.relators()) {
    for (Letter l : r) {
      const char c = sym[static_cast<std::size_t>(letter_gen(l))];
      os << (letter_is_inverse(l) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace picard
