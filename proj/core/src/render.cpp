#include <algorithm>
#include <sstream>

#include "psc/multiplet.hpp"

namespace psc {
namespace {

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

// Rows of cells, rendered as "[ a  b  c ]" with aligned columns.
std::string bracket_grid(const std::vector<int>& row_labels,
                         const std::vector<std::vector<std::string>>& cells, bool numeric) {
  if (cells.empty()) return "";
  const std::size_t ncols = cells.front().size();
  std::vector<std::size_t> width(ncols, 1);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < ncols; ++c) width[c] = std::max(width[c], row[c].size());
  std::size_t label_w = 1;
  for (int r : row_labels) label_w = std::max(label_w, std::to_string(r).size());

  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << pad_left(std::to_string(row_labels[r]), label_w) << " [";
    for (std::size_t c = 0; c < ncols; ++c) {
      os << ' ';
      const bool last = c + 1 == ncols;
      if (numeric)
        os << pad_left(cells[r][c], width[c]);
      else
        os << pad_right(cells[r][c], width[c]);
      if (!last) os << ' ';
    }
    os << " ]\n";
  }
  return os.str();
}

std::string unsigned_rep(const VirtualRep& v) {
  std::string s;
  for (const auto& [w, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c);
    s += format_label(v.signature(), w);
  }
  return s;
}

}  // namespace

std::string render_betti(const BettiTable& b) {
  std::vector<int> labels;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    labels.push_back(b.first_row + static_cast<int>(r));
    std::vector<std::string> row;
    for (auto x : b.rows[r]) row.push_back(x == 0 ? "-" : std::to_string(x));
    cells.push_back(std::move(row));
  }
  return bracket_grid(labels, cells, true);
}

std::string render_text(const MultipletTable& t) {
  std::ostringstream os;
  os << "multiplet: " << t.source << "\n";
  os << "algebra: " << t.algebra << " (" << t.signature.name() << "), " << t.n_vars
     << " generators\n";
  os << "certified: " << (t.certified ? "yes" : "no") << " (checked through weight "
     << t.max_weight << ")\n";
  os << "numerator: " << format_numerator(t.numerator()) << "\n";
  if (t.entries.empty()) {
    os << "entries: none\n";
    return os.str();
  }
  os << "start weight: " << t.start_weight() << "\n";
  os << "layout: conjectural (Koszul degrees inferred from signs)\n";

  const BettiTable b = t.betti();
  os << "\nbetti (rows: cohomological degree, columns: Koszul degree " << b.first_col << ".."
     << b.first_col + static_cast<int>(b.rows.empty() ? 0 : b.rows.front().size()) - 1 << "):\n";
  os << render_betti(b);

  std::vector<int> labels;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    const int row = b.first_row + static_cast<int>(r);
    labels.push_back(row);
    std::vector<std::string> line;
    for (std::size_t c = 0; c < b.rows[r].size(); ++c) {
      const int col = b.first_col + static_cast<int>(c);
      std::string cell = "-";
      for (const auto& lc : t.layout)
        if (lc.koszul == col && lc.cohom() == row) cell = unsigned_rep(lc.rep);
      line.push_back(cell);
    }
    cells.push_back(std::move(line));
  }
  os << "\nfields:\n" << bracket_grid(labels, cells, false);

  os << "\ngenerators (W_i at weight start + i):\n";
  const int s = t.start_weight();
  for (int w = s; w <= t.last_weight(); ++w)
    os << "W_" << w - s << " = " << format_rep(t.entry(w)) << "\n";
  return os.str();
}

}  // namespace psc
