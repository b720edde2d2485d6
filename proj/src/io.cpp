#include "okp/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "okp/format.hpp"
#include "okp/offline.hpp"

namespace okp {
namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string instance_csv(const Instance& instance) {
  std::string out = "value,weight\n";
  for (const auto& it : instance.items()) {
    out += format_double(it.value);
    out += ',';
    out += format_double(it.weight);
    out += '\n';
  }
  return out;
}

void write_instance_csv(const std::filesystem::path& path, const Instance& instance) {
  write_text(path, instance_csv(instance));
}

Instance parse_instance_csv(std::string_view text, std::optional<Bounds> bounds,
                            std::string_view origin) {
  std::vector<Item> items;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "value,weight") {
        throw DataError(std::string(origin) + ":" + std::to_string(lineno) +
                        ": expected header 'value,weight'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw DataError(std::string(origin) + ":" + std::to_string(lineno) +
                      ": expected two columns");
    }
    try {
      items.push_back({parse_double(line.substr(0, comma), "value"),
                       parse_double(line.substr(comma + 1), "weight")});
    } catch (const DataError& e) {
      throw DataError(std::string(origin) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!header_seen) throw DataError(std::string(origin) + ": missing header 'value,weight'");
  return Instance(std::move(items), bounds);
}

Instance read_instance_csv(const std::filesystem::path& path, std::optional<Bounds> bounds) {
  return parse_instance_csv(read_text(path), bounds, path.string());
}

void write_solution_csv(const std::filesystem::path& path, const Instance& instance,
                        const Solution& solution) {
  std::string out = "index,value,weight,x\n";
  for (std::size_t i = 0; i < instance.size(); ++i) {
    out += std::to_string(i) + ',' + format_double(instance[i].value) + ',' +
           format_double(instance[i].weight) + ',' + format_double(solution.decisions[i]) + '\n';
  }
  write_text(path, out);
}

std::filesystem::path metadata_path(const std::filesystem::path& instance_path) {
  return instance_path.string() + ".meta";
}

void write_metadata(const std::filesystem::path& path, const Metadata& meta) {
  std::string out;
  for (const auto& [k, v] : meta) out += k + "=" + v + "\n";
  write_text(path, out);
}

Metadata read_metadata(const std::filesystem::path& path) {
  Metadata meta;
  std::istringstream in(read_text(path));
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw DataError("'" + path.string() + "': expected key=value, got '" + std::string(t) + "'");
    }
    meta[std::string(trim(t.substr(0, eq)))] = std::string(trim(t.substr(eq + 1)));
  }
  return meta;
}

std::optional<Bounds> bounds_from_metadata(const Metadata& meta) {
  const auto lo = meta.find("L");
  const auto hi = meta.find("U");
  if (lo == meta.end() || hi == meta.end()) return std::nullopt;
  return Bounds{parse_double(lo->second, "L"), parse_double(hi->second, "U")};
}

Metadata describe_instance(const Instance& instance) {
  Metadata meta;
  if (instance.bounds()) {
    meta["L"] = format_double(instance.bounds()->lower);
    meta["U"] = format_double(instance.bounds()->upper);
  }
  const auto info = critical_value(instance);
  meta["n"] = std::to_string(instance.size());
  meta["vhat"] = format_double(info.vhat);
  meta["omegahat"] = format_double(info.omegahat);
  meta["opt"] = format_double(info.opt_profit);
  return meta;
}

}  // namespace okp
