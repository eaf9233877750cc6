// Copyright 2026 The scg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scg/wire.hpp"

#include <string_view>

namespace scg {
namespace {

enum WireType : std::uint32_t {
  kVarint = 0,
  kFixed64 = 1,
  kLengthDelimited = 2,
  kStartGroup = 3,
  kEndGroup = 4,
  kFixed32 = 5,
};

// ---------------------------------------------------------------------------
// Encoding

class Writer {
 public:
  void varint(std::uint64_t value) {
    while (value >= 0x80) {
      out_.push_back(static_cast<std::uint8_t>(value | 0x80));
      value >>= 7;
    }
    out_.push_back(static_cast<std::uint8_t>(value));
  }

  void tag(std::uint32_t field, WireType type) { varint((field << 3) | type); }

  void string_field(std::uint32_t field, std::string_view value, bool always = false) {
    if (value.empty() && !always) return;
    tag(field, kLengthDelimited);
    varint(value.size());
    out_.insert(out_.end(), value.begin(), value.end());
  }

  // int32 goes on the wire sign-extended to 64 bits.
  void int32_field(std::uint32_t field, std::int32_t value) {
    if (value == 0) return;
    tag(field, kVarint);
    varint(static_cast<std::uint64_t>(static_cast<std::int64_t>(value)));
  }

  void message_field(std::uint32_t field, const Bytes& body) {
    tag(field, kLengthDelimited);
    varint(body.size());
    out_.insert(out_.end(), body.begin(), body.end());
  }

  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

Bytes encode_location(const SourceLocation& loc) {
  Writer w;
  w.string_field(1, loc.uri);
  w.int32_field(2, loc.startLine);
  w.int32_field(3, loc.startCharacter);
  w.int32_field(4, loc.endLine);
  w.int32_field(5, loc.endCharacter);
  return w.take();
}

// Map entries always carry both key and value.
void encode_properties(Writer& w, std::uint32_t field, const Properties& props) {
  for (const auto& [key, value] : props) {
    Writer entry;
    entry.string_field(1, key, true);
    entry.string_field(2, value, true);
    w.message_field(field, entry.take());
  }
}

Bytes encode_edge(const Edge& e) {
  Writer w;
  w.string_field(1, e.to);
  w.string_field(2, e.type);
  if (e.location) w.message_field(3, encode_location(*e.location));
  encode_properties(w, 4, e.properties);
  return w.take();
}

Bytes encode_node(const GraphNode& n) {
  Writer w;
  w.string_field(1, n.id);
  w.string_field(2, n.kind);
  if (n.location) w.message_field(3, encode_location(*n.location));
  encode_properties(w, 4, n.properties);
  w.string_field(5, n.displayName);
  for (const auto& e : n.edges) w.message_field(6, encode_edge(e));
  return w.take();
}

// ---------------------------------------------------------------------------
// Decoding

class Reader {
 public:
  Reader(std::span<const std::uint8_t> data, std::size_t base) : data_(data), base_(base) {}

  bool done() const { return pos_ >= data_.size(); }
  std::size_t offset() const { return base_ + pos_; }

  std::uint64_t varint() {
    const std::size_t start = offset();
    std::uint64_t result = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      if (pos_ >= data_.size()) throw DecodeError("truncated varint", start);
      const std::uint8_t byte = data_[pos_++];
      result |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
      if ((byte & 0x80) == 0) return result;
    }
    throw DecodeError("varint longer than 10 bytes", start);
  }

  // Returns the payload of a length-delimited field and the absolute offset
  // where it starts.
  std::pair<std::span<const std::uint8_t>, std::size_t> length_delimited() {
    const std::size_t start = offset();
    const std::uint64_t len = varint();
    if (len > data_.size() - pos_) throw DecodeError("length exceeds remaining input", start);
    const std::size_t body_offset = offset();
    auto body = data_.subspan(pos_, static_cast<std::size_t>(len));
    pos_ += static_cast<std::size_t>(len);
    return {body, body_offset};
  }

  std::string string() {
    auto [body, off] = length_delimited();
    return std::string(body.begin(), body.end());
  }

  void skip(WireType type) {
    const std::size_t start = offset();
    switch (type) {
      case kVarint:
        varint();
        return;
      case kFixed64:
        advance(8, start);
        return;
      case kLengthDelimited:
        length_delimited();
        return;
      case kFixed32:
        advance(4, start);
        return;
      case kStartGroup:
      case kEndGroup:
        break;
    }
    throw DecodeError("unsupported wire type " + std::to_string(type), start);
  }

  // Reads the next tag; returns {field number, wire type}.
  std::pair<std::uint32_t, WireType> tag() {
    const std::size_t start = offset();
    const std::uint64_t raw = varint();
    const auto field = static_cast<std::uint32_t>(raw >> 3);
    const auto type = static_cast<std::uint32_t>(raw & 7);
    if (field == 0) throw DecodeError("field number 0", start);
    if (type > kFixed32) throw DecodeError("invalid wire type " + std::to_string(type), start);
    return {field, static_cast<WireType>(type)};
  }

 private:
  void advance(std::size_t n, std::size_t start) {
    if (n > data_.size() - pos_) throw DecodeError("truncated fixed-width field", start);
    pos_ += n;
  }

  std::span<const std::uint8_t> data_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// Repeated occurrences of a message field merge into the previous value, as in
// any proto3 parser.
void decode_location(std::span<const std::uint8_t> data, std::size_t base, SourceLocation& loc) {
  Reader r(data, base);
  while (!r.done()) {
    auto [field, type] = r.tag();
    if (field == 1 && type == kLengthDelimited) {
      loc.uri = r.string();
    } else if (field >= 2 && field <= 5 && type == kVarint) {
      const auto value = static_cast<std::int32_t>(static_cast<std::uint32_t>(r.varint()));
      switch (field) {
        case 2: loc.startLine = value; break;
        case 3: loc.startCharacter = value; break;
        case 4: loc.endLine = value; break;
        default: loc.endCharacter = value; break;
      }
    } else {
      r.skip(type);
    }
  }
}

void decode_map_entry(std::span<const std::uint8_t> data, std::size_t base, Properties& props) {
  Reader r(data, base);
  std::string key;
  std::string value;
  while (!r.done()) {
    auto [field, type] = r.tag();
    if (field == 1 && type == kLengthDelimited) {
      key = r.string();
    } else if (field == 2 && type == kLengthDelimited) {
      value = r.string();
    } else {
      r.skip(type);
    }
  }
  props.insert_or_assign(std::move(key), std::move(value));
}

Edge decode_edge(std::span<const std::uint8_t> data, std::size_t base) {
  Edge e;
  Reader r(data, base);
  while (!r.done()) {
    auto [field, type] = r.tag();
    if (type != kLengthDelimited || field > 4) {
      r.skip(type);
      continue;
    }
    switch (field) {
      case 1: e.to = r.string(); break;
      case 2: e.type = r.string(); break;
      case 3: {
        auto [body, off] = r.length_delimited();
        if (!e.location) e.location.emplace();
        decode_location(body, off, *e.location);
        break;
      }
      case 4: {
        auto [body, off] = r.length_delimited();
        decode_map_entry(body, off, e.properties);
        break;
      }
    }
  }
  return e;
}

GraphNode decode_node(std::span<const std::uint8_t> data, std::size_t base) {
  GraphNode n;
  Reader r(data, base);
  while (!r.done()) {
    auto [field, type] = r.tag();
    if (type != kLengthDelimited || field > 6) {
      r.skip(type);
      continue;
    }
    switch (field) {
      case 1: n.id = r.string(); break;
      case 2: n.kind = r.string(); break;
      case 3: {
        auto [body, off] = r.length_delimited();
        if (!n.location) n.location.emplace();
        decode_location(body, off, *n.location);
        break;
      }
      case 4: {
        auto [body, off] = r.length_delimited();
        decode_map_entry(body, off, n.properties);
        break;
      }
      case 5: n.displayName = r.string(); break;
      case 6: {
        auto [body, off] = r.length_delimited();
        n.edges.push_back(decode_edge(body, off));
        break;
      }
    }
  }
  return n;
}

}  // namespace

DecodeError::DecodeError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}

Bytes encode_file(const SemanticGraphFile& file) {
  Writer w;
  w.string_field(1, file.uri);
  for (const auto& node : file.nodes) w.message_field(2, encode_node(node));
  return w.take();
}

SemanticGraphFile decode_file(std::span<const std::uint8_t> bytes) {
  SemanticGraphFile file;
  Reader r(bytes, 0);
  while (!r.done()) {
    auto [field, type] = r.tag();
    if (field == 1 && type == kLengthDelimited) {
      file.uri = r.string();
    } else if (field == 2 && type == kLengthDelimited) {
      auto [body, off] = r.length_delimited();
      file.nodes.push_back(decode_node(body, off));
    } else {
      r.skip(type);
    }
  }
  return file;
}

}  // namespace scg
