#include "engelnq/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "engelnq/version.hpp"

namespace engelnq {

std::string input_hash(const std::string &text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Json make_report(const std::string &subcommand, const std::string &input_desc,
                 const std::string &input_text) {
  Json j;
  j["tool"] = {{"name", "engelnq"}, {"version", kVersion}};
  j["subcommand"] = subcommand;
  j["input"] = {{"source", input_desc}, {"hash", input_hash(input_text)}};
  j["result"] = Json::object();
  return j;
}

void attach_timing(Json &report, double wall_seconds) {
  auto now = std::chrono::system_clock::now();
  auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
          .count();
  report["timing"] = {{"timestamp_unix", secs},
                      {"wall_seconds", wall_seconds}};
}

namespace {

void render(std::ostringstream &os, const Json &j, unsigned indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() &&
                                     !it.value().empty() &&
                                     it.value().front().is_structured())) {
        os << pad << it.key() << ":\n";
        render(os, it.value(), indent + 2);
      } else if (it.value().is_array()) {
        os << pad << it.key() << ": ";
        bool first = true;
        for (const auto &v : it.value()) {
          if (!first)
            os << ", ";
          os << (v.is_string() ? v.get<std::string>() : v.dump());
          first = false;
        }
        os << "\n";
      } else {
        os << pad << it.key() << ": "
           << (it.value().is_string() ? it.value().get<std::string>()
                                      : it.value().dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    unsigned k = 0;
    for (const auto &v : j) {
      os << pad << "- [" << k++ << "]\n";
      render(os, v, indent + 2);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

} // namespace

std::string render_human(const Json &report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

} // namespace engelnq
