#include "mpc/bfile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mpc/error.hpp"

namespace mpc {

BFileSequence::BFileSequence(std::string source_name, std::vector<BFileEntry> entries)
    : source_name_(std::move(source_name)), entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].index <= entries_[i - 1].index) {
      throw FormatError("non-increasing index " + std::to_string(entries_[i].index), 0);
    }
  }
}

std::int64_t BFileSequence::first_index() const {
  if (entries_.empty()) throw RangeError("empty sequence");
  return entries_.front().index;
}

std::int64_t BFileSequence::last_index() const {
  if (entries_.empty()) throw RangeError("empty sequence");
  return entries_.back().index;
}

std::optional<std::uint64_t> BFileSequence::at(std::int64_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const BFileEntry& e, std::int64_t i) { return e.index < i; });
  if (it == entries_.end() || it->index != index) return std::nullopt;
  return it->value;
}

bool BFileSequence::covers(std::int64_t first, std::int64_t last) const {
  if (first > last) return true;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), first,
                             [](const BFileEntry& e, std::int64_t i) { return e.index < i; });
  if (it == entries_.end() || it->index != first) return false;
  // Indices are strictly increasing integers, so contiguity is a count.
  const auto offset = static_cast<std::size_t>(it - entries_.begin());
  const auto span = static_cast<std::size_t>(last - first);
  return offset + span < entries_.size() && entries_[offset + span].index == last;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <typename T>
bool parse_int(std::string_view field, T& out) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

}  // namespace

BFileSequence parse_bfile(std::string_view text, std::string source_name) {
  std::vector<BFileEntry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto split = line.find_first_of(" \t");
    if (split == std::string_view::npos) throw FormatError("expected 'index value'", line_no);
    const std::string_view index_field = line.substr(0, split);
    const std::string_view value_field = trim(line.substr(split));
    if (value_field.find_first_of(" \t") != std::string_view::npos) {
      throw FormatError("expected exactly two fields", line_no);
    }

    BFileEntry entry;
    if (!parse_int(index_field, entry.index)) throw FormatError("index is not an integer", line_no);
    if (!value_field.empty() && value_field.front() == '-') throw FormatError("negative value", line_no);
    if (!parse_int(value_field, entry.value)) throw FormatError("value is not a non-negative integer", line_no);
    if (!entries.empty() && entry.index <= entries.back().index) {
      throw FormatError("non-increasing index " + std::to_string(entry.index), line_no);
    }
    entries.push_back(entry);
  }
  return BFileSequence(std::move(source_name), std::move(entries));
}

BFileSequence load_bfile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open b-file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bfile(buffer.str(), path.stem().string());
}

std::string render_bfile(const BFileSequence& sequence) {
  std::string out;
  if (!sequence.source_name().empty()) out += "# " + sequence.source_name() + "\n";
  for (const BFileEntry& e : sequence.entries()) {
    out += std::to_string(e.index);
    out += ' ';
    out += std::to_string(e.value);
    out += '\n';
  }
  return out;
}

}  // namespace mpc
