#include "facering/betti_table.hpp"

#include <algorithm>
#include <sstream>
#include <iomanip>
#include <vector>

namespace facering {

void GradedBettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

std::uint64_t GradedBettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t GradedBettiTable::total(int i) const {
  std::uint64_t sum = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i) sum += value;
  }
  return sum;
}

int GradedBettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [key, value] : entries_) p = std::max(p, key.first);
  return p;
}

std::string GradedBettiTable::diagram() const {
  const int columns = projective_dimension() + 1;
  int rows = 1;
  for (const auto& [key, value] : entries_) rows = std::max(rows, key.second - key.first + 1);

  std::vector<std::vector<std::string>> cells(
      static_cast<std::size_t>(rows + 2),
      std::vector<std::string>(static_cast<std::size_t>(columns + 1)));
  cells[0][0] = "";
  cells[1][0] = "total:";
  for (int i = 0; i < columns; ++i) {
    cells[0][static_cast<std::size_t>(i + 1)] = std::to_string(i);
    cells[1][static_cast<std::size_t>(i + 1)] = std::to_string(total(i));
  }
  for (int r = 0; r < rows; ++r) {
    cells[static_cast<std::size_t>(r + 2)][0] = std::to_string(r) + ":";
    for (int i = 0; i < columns; ++i) {
      const auto v = at(i, i + r);
      cells[static_cast<std::size_t>(r + 2)][static_cast<std::size_t>(i + 1)] =
          v ? std::to_string(v) : ".";
    }
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(columns + 1), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::ostringstream cell;
      cell << std::setw(static_cast<int>(width[c])) << row[c];
      line += (c ? " " : "") + cell.str();
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace facering
