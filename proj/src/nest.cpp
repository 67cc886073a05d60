#include "dyck/nest.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace dyck {

dyck_nest root_nest(int k) {
  if (k < 1) throw error(errc::k_too_small, "order must be at least 1");
  dyck_nest out;
  out.k = k;
  out.values.reserve(2 * k + 1);
  for (int v = 0; v <= k; ++v) out.values.push_back(v);
  for (int v = k; v >= 1; --v) out.values.push_back(v);
  return out;
}

dyck_nest castle(const dyck_nest &nest, int i, castling_record *rec) {
  int n = nest.n();
  if (i < 1 || i > nest.k - 1)
    throw error(errc::invalid_depth,
                "depth " + std::to_string(i) + " not in [1," +
                    std::to_string(nest.k - 1) + "]");
  int mid_begin = i, mid_end = n - i; // [mid_begin, mid_end[
  int c = nest.values[mid_begin];
  int split = -1; // where Y starts: first middle entry holding value c+1
  for (int p = mid_begin + 1; p < mid_end; ++p) {
    if (nest.values[p] == c + 1) {
      split = p;
      break;
    }
  }
  if (split < 0)
    throw error(errc::pivot_missing,
                "value " + std::to_string(c + 1) + " absent from the middle");
#ifndef NDEBUG
  for (int p = 0; p + 1 < i; ++p) {
    assert(nest.values[p] < nest.values[p + 1]);
    assert(nest.values[n - 1 - p] < nest.values[n - 2 - p]);
  }
#endif
  dyck_nest out;
  out.k = nest.k;
  out.values.reserve(n);
  out.values.insert(out.values.end(), nest.values.begin(),
                    nest.values.begin() + mid_begin);
  out.values.insert(out.values.end(), nest.values.begin() + split,
                    nest.values.begin() + mid_end);
  out.values.insert(out.values.end(), nest.values.begin() + mid_begin,
                    nest.values.begin() + split);
  out.values.insert(out.values.end(), nest.values.begin() + mid_end,
                    nest.values.end());
  if (rec != nullptr) {
    rec->i = i;
    rec->c = c;
    rec->x_begin = mid_begin;
    rec->x_len = split - mid_begin;
    rec->y_len = mid_end - split;
    rec->leftmost_y = out.values[mid_begin];
  }
  return out;
}

dyck_nest castle(const dyck_nest &nest, int i) { return castle(nest, i, nullptr); }

dyck_nest nest_for_germ(const k_germ &germ) {
  std::vector<int> locations;
  k_germ cur = germ;
  while (!cur.is_null()) {
    locations.push_back(rightmost_nonzero_index(cur));
    cur = parent(cur);
  }
  dyck_nest nest = root_nest(germ.k);
  for (auto it = locations.rbegin(); it != locations.rend(); ++it)
    nest = castle(nest, *it);
  return nest;
}

anchored_word nest_to_word(const dyck_nest &nest) {
  std::vector<bool> seen(nest.k + 1, false);
  anchored_word out;
  out.k = nest.k;
  out.bits.reserve(nest.n());
  for (int v : nest.values) {
    out.bits.push_back(seen[v] ? '1' : '0');
    seen[v] = true;
  }
  return out;
}

bool is_anchored_bits(const std::string &bits) {
  int height = 0;
  for (char c : bits) {
    height += (c == '0') ? 1 : -1;
    if (height <= 0) return false;
  }
  return !bits.empty();
}

anchored_word word_from_bits(const std::string &bits) {
  if (bits.empty() || bits.size() % 2 == 0)
    throw error(errc::wrong_length, "length must be odd, got " +
                                        std::to_string(bits.size()));
  int ones = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw error(errc::not_dyck, std::string("unexpected character '") + c + "'");
    ones += (c == '1');
  }
  int k = static_cast<int>(bits.size()) / 2;
  if (ones != k)
    throw error(errc::not_dyck, "weight " + std::to_string(ones) +
                                    " instead of " + std::to_string(k));
  if (!is_anchored_bits(bits))
    throw error(errc::not_dyck, "a prefix runs out of surplus zeros");
  return anchored_word{k, bits};
}

dyck_nest word_to_nest(const anchored_word &word) {
  int n = word.n();
  // 0-bits keyed by (height before the step, position); the deepest layer
  // gets the largest values, left to right inside a layer
  std::vector<std::pair<int, int>> ups;
  std::vector<int> open; // positions of unmatched 0-bits
  std::vector<int> match(n, -1);
  int height = 0;
  for (int p = 0; p < n; ++p) {
    if (word.bits[p] == '0') {
      ups.push_back({height, p});
      open.push_back(p);
      ++height;
    } else {
      if (open.size() <= 1)
        throw error(errc::not_dyck, "down step at position " +
                                        std::to_string(p) +
                                        " would consume the anchor");
      match[p] = open.back();
      open.pop_back();
      --height;
    }
  }
  std::sort(ups.begin(), ups.end(), [](const auto &a, const auto &b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<int> value(n, -1);
  int next = word.k;
  for (const auto &[layer, pos] : ups) {
    (void)layer;
    value[pos] = next--;
  }
  assert(next == -1);
  dyck_nest out;
  out.k = word.k;
  out.values.resize(n);
  for (int p = 0; p < n; ++p)
    out.values[p] = (match[p] >= 0) ? value[match[p]] : value[p];
  return out;
}

std::vector<std::pair<int, int>> path_steps(const anchored_word &word) {
  std::vector<std::pair<int, int>> pts;
  pts.reserve(word.n() + 1);
  int x = 0, y = 0;
  pts.push_back({x, y});
  for (char c : word.bits) {
    ++x;
    y += (c == '0') ? 1 : -1;
    pts.push_back({x, y});
  }
  return pts;
}

bool is_valid_nest(const dyck_nest &nest, std::string *why) {
  auto fail = [&](const std::string &reason) {
    if (why != nullptr) *why = reason;
    return false;
  };
  int n = 2 * nest.k + 1;
  if (nest.k < 0) return fail("order below 0");
  if (static_cast<int>(nest.values.size()) != n)
    return fail("length " + std::to_string(nest.values.size()) +
                " instead of " + std::to_string(n));
  if (nest.values[0] != 0) return fail("front entry is not 0");
  std::vector<int> first(nest.k + 1, -1), last(nest.k + 1, -1),
      count(nest.k + 1, 0);
  for (int p = 0; p < n; ++p) {
    int v = nest.values[p];
    if (v < 0 || v > nest.k)
      return fail("value " + std::to_string(v) + " out of range at position " +
                  std::to_string(p));
    if (first[v] < 0) first[v] = p;
    last[v] = p;
    ++count[v];
  }
  if (count[0] != 1) return fail("value 0 appears " + std::to_string(count[0]) + " times");
  for (int v = 1; v <= nest.k; ++v)
    if (count[v] != 2)
      return fail("value " + std::to_string(v) + " appears " +
                  std::to_string(count[v]) + " times");
  if (nest.k >= 1 && last[nest.k] != first[nest.k] + 1)
    return fail("the two largest values are not adjacent");
  for (int v = 1; v <= nest.k; ++v)
    for (int u = 1; u <= nest.k; ++u) {
      if (u == v) continue;
      bool first_in = first[u] > first[v] && first[u] < last[v];
      bool last_in = last[u] > first[v] && last[u] < last[v];
      if (first_in != last_in)
        return fail("pair " + std::to_string(u) + " crosses pair " +
                    std::to_string(v));
    }
  return true;
}

void validate_nest(const dyck_nest &nest) {
  std::string why;
  if (!is_valid_nest(nest, &why)) throw error(errc::not_dyck, why);
}

std::string nest_to_string(const dyck_nest &nest) {
  if (nest.k <= 9) {
    std::string s;
    for (int v : nest.values) s.push_back(static_cast<char>('0' + v));
    return s;
  }
  std::string s;
  for (std::size_t p = 0; p < nest.values.size(); ++p) {
    if (p > 0) s.push_back(',');
    s += std::to_string(nest.values[p]);
  }
  return s;
}

dyck_nest nest_from_string(const std::string &s) {
  std::vector<int> values;
  if (s.find(',') != std::string::npos) {
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) values.push_back(std::stoi(item));
  } else {
    for (char c : s) {
      if (c < '0' || c > '9')
        throw error(errc::not_dyck, std::string("unexpected character '") + c + "'");
      values.push_back(c - '0');
    }
  }
  int k = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
  return dyck_nest{k, std::move(values)};
}

} // namespace dyck
