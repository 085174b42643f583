#include "freegrowth/checkpoint.hpp"

#include <cstdio>      // for rename
#include <fstream>     // for ifstream, ofstream
#include <sstream>     // for istringstream

#include "freegrowth/errors.hpp"
#include "freegrowth/subsemigroups.hpp"

namespace freegrowth {

  namespace {
    constexpr std::string_view magic = "freegrowth-ckpt v1";

    // "key=value" fields of the header, in order.
    std::string field(std::string const& header, std::string const& key) {
      std::string const needle = "; " + key + "=";
      auto              pos    = header.find(needle);
      if (pos == std::string::npos) {
        throw Error("checkpoint header lacks " + key + ": " + header);
      }
      pos += needle.size();
      auto const end = header.find(';', pos);
      return header.substr(pos, end == std::string::npos ? end : end - pos);
    }

    std::size_t to_size(std::string const& s, std::string const& what) {
      try {
        std::size_t used;
        auto        v = std::stoull(s, &used);
        if (used != s.size()) {
          throw std::invalid_argument(s);
        }
        return v;
      } catch (std::exception const&) {
        throw Error("checkpoint has malformed " + what + " \"" + s + "\"");
      }
    }
  }  // namespace

  void write_checkpoint(std::string const& path, Checkpoint const& ckpt) {
    WordCodec const&  codec = WordCodec::get(ckpt.rank);
    std::string const tmp   = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw Error("cannot write checkpoint " + tmp);
      }
      out << magic << "; kind=" << to_string(ckpt.kind) << "; r=" << ckpt.rank
          << "; depth=" << ckpt.depth << '\n';
      for (auto const& gaps : ckpt.frontier) {
        out << "r=" << ckpt.rank << "; gaps=";
        for (std::size_t i = 0; i < gaps.size(); ++i) {
          out << (i == 0 ? "" : ",") << codec.to_string(gaps[i]);
        }
        out << '\n';
      }
      out << "counts=";
      for (std::size_t i = 0; i < ckpt.counts.size(); ++i) {
        out << (i == 0 ? "" : ",") << ckpt.counts[i];
      }
      out << '\n';
      out.flush();
      if (!out) {
        throw Error("failed writing checkpoint " + tmp);
      }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
      throw Error("cannot move checkpoint into place at " + path);
    }
  }

  Checkpoint read_checkpoint(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open checkpoint " + path);
    }
    std::string header;
    if (!std::getline(in, header) || header.rfind(magic, 0) != 0) {
      throw Error(path + " is not a freegrowth checkpoint");
    }
    Checkpoint ckpt;
    ckpt.kind  = tree_kind_from_string(field(header, "kind"));
    ckpt.rank  = to_size(field(header, "r"), "rank");
    ckpt.depth = to_size(field(header, "depth"), "depth");

    bool        have_trailer = false;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (line.empty()) {
        continue;
      }
      if (have_trailer) {
        throw Error("checkpoint " + path + " has data after the counts line");
      }
      if (line.rfind("counts=", 0) == 0) {
        have_trailer = true;
        std::istringstream ss(line.substr(7));
        std::string        item;
        while (std::getline(ss, item, ',')) {
          ckpt.counts.push_back(to_size(item, "count"));
        }
        continue;
      }
      GapSet g = GapSet::parse(line);
      if (g.rank() != ckpt.rank || g.index() != ckpt.depth) {
        throw Error("checkpoint frontier line \"" + line
                    + "\" does not match the header");
      }
      ckpt.frontier.push_back(g.keys());
    }
    if (!have_trailer) {
      throw Error("checkpoint " + path + " is truncated (no counts line)");
    }
    if (ckpt.counts.size() != ckpt.depth
        || (ckpt.depth > 0 && ckpt.counts.back() != ckpt.frontier.size())) {
      throw Error("checkpoint " + path
                  + " counts are inconsistent with its frontier");
    }
    return ckpt;
  }

}  // namespace freegrowth
