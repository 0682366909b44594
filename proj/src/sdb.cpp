#include "gapseq/sdb.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace gapseq {

namespace {

[[noreturn]] void fail_line(int line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ItemId ItemCatalog::intern(std::string_view token) {
  auto it = index_.find(std::string(token));
  if (it != index_.end()) return it->second;
  ItemId id = static_cast<ItemId>(tokens_.size());
  tokens_.emplace_back(token);
  index_.emplace(tokens_.back(), id);
  return id;
}

std::optional<ItemId> ItemCatalog::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& ItemCatalog::token(ItemId id) const {
  if (id < 0 || id >= size()) throw std::out_of_range("unknown item id " + std::to_string(id));
  return tokens_[static_cast<std::size_t>(id)];
}

SequenceDatabase::SequenceDatabase(std::vector<Sequence> sequences, ItemCatalog catalog)
    : sequences_(std::move(sequences)), catalog_(std::move(catalog)) {
  pos_by_sid_.reserve(sequences_.size());
  for (std::size_t pos = 0; pos < sequences_.size(); ++pos) {
    const Sequence& s = sequences_[pos];
    if (s.items.empty()) throw std::invalid_argument("sequence " + std::to_string(s.sid) + " is empty");
    for (ItemId v : s.items) {
      if (v < 0 || v >= catalog_.size())
        throw std::invalid_argument("sequence " + std::to_string(s.sid) + " holds an item outside the catalog");
    }
    if (!pos_by_sid_.emplace(s.sid, static_cast<int>(pos)).second)
      throw std::invalid_argument("duplicate sid " + std::to_string(s.sid));
    max_length_ = std::max(max_length_, s.length());
  }
}

const Sequence& SequenceDatabase::operator[](int sid) const {
  auto it = pos_by_sid_.find(sid);
  if (it == pos_by_sid_.end()) throw std::out_of_range("unknown sid " + std::to_string(sid));
  return sequences_[static_cast<std::size_t>(it->second)];
}

int SequenceDatabaseBuilder::add(std::vector<ItemId> items) {
  int sid = sequences_.empty() ? 0 : sequences_.back().sid + 1;
  return add(sid, std::move(items));
}

int SequenceDatabaseBuilder::add(int sid, std::vector<ItemId> items) {
  sequences_.push_back(Sequence{sid, std::move(items)});
  return sid;
}

int SequenceDatabaseBuilder::add_tokens(const std::vector<std::string>& tokens) {
  std::vector<ItemId> items;
  items.reserve(tokens.size());
  for (const std::string& t : tokens) items.push_back(intern(t));
  return add(std::move(items));
}

SequenceDatabase SequenceDatabaseBuilder::build() {
  return SequenceDatabase(std::move(sequences_), std::move(catalog_));
}

SequenceDatabase parse_spmf(std::istream& in) {
  SequenceDatabaseBuilder builder;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;

    std::vector<ItemId> items;
    std::vector<std::string> itemset;
    bool terminated = false;
    for (const std::string& tok : toks) {
      if (terminated) fail_line(line_no, "token '" + tok + "' after -2 terminator");
      if (tok == "-1") {
        if (itemset.empty()) fail_line(line_no, "empty itemset before -1");
        if (itemset.size() > 1) fail_line(line_no, "unsupported itemset: " + std::to_string(itemset.size()) + " items before -1 (single-item itemsets only)");
        items.push_back(builder.intern(itemset.front()));
        itemset.clear();
      } else if (tok == "-2") {
        if (!itemset.empty()) fail_line(line_no, "itemset not terminated by -1 before -2");
        terminated = true;
      } else {
        itemset.push_back(tok);
      }
    }
    if (!terminated) fail_line(line_no, "missing -2 terminator");
    if (items.empty()) continue;  // "-2" alone: no items, treat like a blank line
    builder.add(std::move(items));
  }
  return builder.build();
}

SequenceDatabase parse_plain(std::istream& in) {
  SequenceDatabaseBuilder builder;
  std::string line;
  bool any = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    builder.add_tokens(toks);
    any = true;
  }
  if (!any) throw std::runtime_error("empty database");
  return builder.build();
}

SequenceDatabase parse_spmf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_spmf(in);
}

SequenceDatabase parse_plain(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_plain(in);
}

SequenceDatabase replicate(const SequenceDatabase& db, int k) {
  if (k < 1) throw std::invalid_argument("replication factor must be >= 1");
  std::vector<Sequence> out;
  out.reserve(static_cast<std::size_t>(db.size()) * static_cast<std::size_t>(k));
  int sid = 0;
  for (int round = 0; round < k; ++round) {
    for (const Sequence& s : db.sequences()) {
      out.push_back(Sequence{sid++, s.items});
    }
  }
  return SequenceDatabase(std::move(out), db.catalog());
}

DbStats stats(const SequenceDatabase& db) {
  DbStats st;
  st.num_sequences = db.size();
  st.num_items = db.catalog().size();
  st.max_length = db.max_length();
  if (!db.empty()) {
    long long total = 0;
    for (const Sequence& s : db.sequences()) total += s.length();
    st.avg_length = static_cast<double>(total) / static_cast<double>(db.size());
  }
  return st;
}

std::string to_plain(const SequenceDatabase& db) {
  std::string out;
  for (const Sequence& s : db.sequences()) {
    for (std::size_t i = 0; i < s.items.size(); ++i) {
      if (i > 0) out += ' ';
      out += db.catalog().token(s.items[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace gapseq
