#include "mincodes/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mincodes {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based token index
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::istringstream ss(line);
  std::string word;
  while (ss >> word) out.push_back({word, out.size() + 1});
  return out;
}

Int to_int(const Token& t, std::size_t line) {
  Int value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError("'" + t.text + "' is not an integer", line, t.column);
  return value;
}

}  // namespace

ColumnMultiset parse_matrix(std::istream& in, ColumnRequirement requirement) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<RingSpec> ring;
  std::size_t k = 0, m = 0;
  std::vector<ZnVec> cols;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;

    if (!ring) {
      if (tokens.size() != 3) throw ParseError("header must be 'n k m'", line_no);
      const Int n = to_int(tokens[0], line_no);
      const Int kk = to_int(tokens[1], line_no);
      const Int mm = to_int(tokens[2], line_no);
      if (n < 2) throw ParseError("modulus must be at least 2", line_no, 1);
      if (kk < 1) throw ParseError("dimension must be at least 1", line_no, 2);
      if (mm < 0) throw ParseError("column count must be non-negative", line_no, 3);
      ring.emplace(n);
      k = static_cast<std::size_t>(kk);
      m = static_cast<std::size_t>(mm);
      continue;
    }

    if (cols.size() == m) throw ParseError("more columns than the header's " + std::to_string(m), line_no);
    if (tokens.size() != k)
      throw ParseError("expected " + std::to_string(k) + " residues, found " + std::to_string(tokens.size()), line_no);
    std::vector<Int> entries;
    for (const auto& t : tokens) {
      const Int a = to_int(t, line_no);
      if (a < 0 || a >= ring->modulus())
        throw ParseError("residue " + t.text + " out of range [0, " + std::to_string(ring->modulus()) + ")",
                         line_no, t.column);
      entries.push_back(a);
    }
    cols.emplace_back(std::move(entries), ring->modulus());
  }

  if (!ring) throw ParseError("missing header 'n k m'", line_no + 1);
  if (cols.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " columns, found " + std::to_string(cols.size()),
                     line_no + 1);
  try {
    return ColumnMultiset(*ring, k, std::move(cols), requirement);
  } catch (const IndependenceError& e) {
    throw IndependenceError(std::string("matrix rejected: ") + e.what());
  }
}

ColumnMultiset parse_matrix(const std::filesystem::path& path, ColumnRequirement requirement) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return parse_matrix(in, requirement);
}

std::string format_matrix(const ColumnMultiset& lambda) {
  std::ostringstream out;
  out << lambda.modulus() << ' ' << lambda.k() << ' ' << lambda.size() << '\n';
  for (const auto& c : lambda.columns()) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace mincodes
