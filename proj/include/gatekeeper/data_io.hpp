#pragma once

// Schedule and assignment CSV, the synthetic timetable generator, and SVG
// renderers (arrival scatter plot and per-gate Gantt chart).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "gatekeeper/error.hpp"
#include "gatekeeper/evaluator.hpp"
#include "gatekeeper/schedule_model.hpp"

namespace gatekeeper {

inline constexpr std::string_view kScheduleHeader = "flight_id,arrival,departure";
inline constexpr std::string_view kAssignmentHeader = "flight_id,gate";

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

// Reads lines, skipping blank ones, checking the header row and yielding
// (line number, fields) for each data row.
template <class Row>
void read_csv(std::istream& in, std::string_view header, std::size_t width, Row&& row) {
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (trim(view).empty()) continue;
    if (!seen_header) {
      if (trim(view) != header)
        throw ParseError(line_no, "expected header '" + std::string{header} + "'");
      seen_header = true;
      continue;
    }
    const auto fields = split_fields(view);
    if (fields.size() != width)
      throw ParseError(line_no, "expected " + std::to_string(width) + " fields, got " +
                                    std::to_string(fields.size()));
    row(line_no, fields);
  }
  if (in.bad()) throw ParseError(line_no, "read failure");
  if (!seen_header) throw ParseError(0, "missing header '" + std::string{header} + "'");
}

}  // namespace detail

// "HH:MM" or a plain (possibly fractional) number of minutes.
inline Minutes parse_time(std::string_view text) {
  text = detail::trim(text);
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    int hours = 0;
    int minutes = 0;
    const auto hh = text.substr(0, colon);
    const auto mm = text.substr(colon + 1);
    if (hh.empty() || mm.size() != 2 || !detail::parse_number(hh, hours) ||
        !detail::parse_number(mm, minutes) || hours < 0 || minutes < 0 || minutes > 59)
      throw ParseError(0, "bad HH:MM time '" + std::string{text} + "'");
    return hours * 60.0 + minutes;
  }
  double value = 0;
  if (!detail::parse_number(text, value) || !std::isfinite(value))
    throw ParseError(0, "bad time '" + std::string{text} + "'");
  return value;
}

// Integers print without a decimal point; other values use the shortest
// representation that round-trips.
inline std::string format_minutes(Minutes m) {
  if (std::nearbyint(m) == m && std::fabs(m) < 1e15) {
    return std::to_string(static_cast<long long>(m));
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, m);
  return std::string(buf, ptr);
}

inline Schedule parse_schedule(std::istream& in) {
  std::vector<Flight> flights;
  std::unordered_set<std::string> ids;
  detail::read_csv(in, kScheduleHeader, 3, [&](std::size_t line_no, const auto& fields) {
    Flight f;
    f.id = std::string{fields[0]};
    if (f.id.empty()) throw ParseError(line_no, "empty flight id");
    try {
      f.arrival = parse_time(fields[1]);
      f.departure = parse_time(fields[2]);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
    try {
      validate(f);
    } catch (const InvariantError& e) {
      throw InvariantError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!ids.insert(f.id).second)
      throw DuplicateIdError("line " + std::to_string(line_no) + ": duplicate flight id " + f.id);
    flights.push_back(std::move(f));
  });
  return Schedule{std::move(flights)};
}

inline void write_schedule_csv(std::ostream& out, const Schedule& schedule) {
  out << kScheduleHeader << '\n';
  for (const auto& f : schedule)
    out << f.id << ',' << format_minutes(f.arrival) << ',' << format_minutes(f.departure) << '\n';
}

// gate_count defaults to the largest gate index in the file.
inline Assignment parse_assignment(std::istream& in, std::optional<int> gate_count = {}) {
  Assignment a;
  int max_gate = 0;
  detail::read_csv(in, kAssignmentHeader, 2, [&](std::size_t line_no, const auto& fields) {
    const std::string id{fields[0]};
    if (id.empty()) throw ParseError(line_no, "empty flight id");
    int gate = 0;
    if (!detail::parse_number(fields[1], gate) || gate < 1)
      throw ParseError(line_no, "gate must be a positive integer");
    if (!a.gate_of.emplace(id, gate).second)
      throw DuplicateIdError("line " + std::to_string(line_no) + ": duplicate flight id " + id);
    max_gate = std::max(max_gate, gate);
  });
  a.gate_count = gate_count.value_or(std::max(max_gate, 1));
  return a;
}

// Rows follow schedule order.
inline void write_assignment_csv(std::ostream& out, const Schedule& schedule,
                                 const Assignment& a) {
  const auto gates = gates_in_schedule_order(schedule, a);
  out << kAssignmentHeader << '\n';
  for (std::size_t i = 0; i < schedule.size(); ++i)
    out << schedule[i].id << ',' << gates[i] << '\n';
}

struct GeneratorSpec {
  int flight_count{996};
  int window_start{360};   // 6:00
  int window_end{1439};    // 23:59
  int stay_duration{60};
  std::uint64_t rng_seed{0};
};

inline void validate(const GeneratorSpec& spec) {
  if (spec.flight_count < 1) throw InvariantError("flight count must be at least 1");
  if (spec.window_end < spec.window_start) throw InvariantError("window ends before it starts");
  if (spec.stay_duration <= 0) throw InvariantError("stay duration must be positive");
  if (spec.window_start - spec.stay_duration < 0)
    throw InvariantError("window start minus stay would put arrivals before midnight");
}

// Departures are drawn uniformly over the integer minutes of the window and
// each flight arrives stay_duration earlier. Flights are sorted by departure
// and numbered F0001, F0002, ...
inline Schedule generate_instance(const GeneratorSpec& spec) {
  validate(spec);
  std::mt19937_64 rng{spec.rng_seed};
  std::uniform_int_distribution<int> departure{spec.window_start, spec.window_end};
  std::vector<int> departures(static_cast<std::size_t>(spec.flight_count));
  for (auto& d : departures) d = departure(rng);
  std::sort(departures.begin(), departures.end());

  const std::size_t width = std::max<std::size_t>(4, std::to_string(spec.flight_count).size());
  std::vector<Flight> flights;
  flights.reserve(departures.size());
  for (std::size_t i = 0; i < departures.size(); ++i) {
    const std::string number = std::to_string(i + 1);
    flights.push_back({"F" + std::string(width - number.size(), '0') + number,
                       static_cast<Minutes>(departures[i] - spec.stay_duration),
                       static_cast<Minutes>(departures[i])});
  }
  return Schedule{std::move(flights)};
}

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline void check_sink(std::ostream& sink) {
  if (!sink) throw Error("failed writing SVG output");
}

}  // namespace detail

// Arrival time (vertical, minutes) against flight index (horizontal), one
// circle of class "flight" per flight.
inline void emit_scatter_plot(const Schedule& schedule, std::ostream& sink) {
  if (schedule.empty()) throw InvariantError("scatter plot needs a non-empty schedule");
  constexpr double width = 960, height = 540, left = 70, right = 20, top = 40, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double lo = schedule[0].arrival, hi = schedule[0].arrival;
  for (const auto& f : schedule) {
    lo = std::min(lo, f.arrival);
    hi = std::max(hi, f.arrival);
  }
  lo = std::floor(lo / 60) * 60;
  hi = std::max(lo + 60, std::ceil(hi / 60) * 60);
  const double n = static_cast<double>(schedule.size());
  auto x_of = [&](double idx) { return left + (n > 1 ? (idx - 1) / (n - 1) : 0.5) * plot_w; };
  auto y_of = [&](double t) { return top + (1 - (t - lo) / (hi - lo)) * plot_h; };

  sink << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<title>" << schedule.size() << " flights: arrival time by flight index</title>\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n"
       << "<g stroke=\"black\" stroke-width=\"1\">\n"
       << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
       << "\" y2=\"" << top + plot_h << "\"/>\n"
       << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
       << top + plot_h << "\"/>\n"
       << "</g>\n";

  sink << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  const double step = (hi - lo) > 12 * 60 ? 120 : 60;
  for (double t = lo; t <= hi + 1e-9; t += step) {
    char label[16];
    std::snprintf(label, sizeof label, "%02d:%02d", static_cast<int>(t) / 60,
                  static_cast<int>(t) % 60);
    sink << "<text x=\"" << left - 8 << "\" y=\"" << detail::fmt2(y_of(t) + 4)
         << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  sink << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 12
       << "\" text-anchor=\"middle\">flight index (1.." << schedule.size() << ")</text>\n"
       << "<text x=\"16\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << top + plot_h / 2 << ")\">arrival time</text>\n"
       << "</g>\n";

  sink << "<g fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const auto& f = schedule[i];
    sink << "<circle class=\"flight\" cx=\"" << detail::fmt2(x_of(static_cast<double>(i + 1)))
         << "\" cy=\"" << detail::fmt2(y_of(f.arrival)) << "\" r=\"2.5\"><title>"
         << detail::xml_escape(f.id) << ' ' << format_minutes(f.arrival) << "</title></circle>\n";
  }
  sink << "</g>\n</svg>\n";
  detail::check_sink(sink);
}

// One row per gate, one rect of class "bar" per flight over [arrival,
// departure], lighter "buffer" rects over [a - b, a] and [d, d + b]. Flights
// in a hard conflict get the extra class "conflict" and a red outline.
inline void emit_gantt(const Schedule& schedule, const Assignment& a, const ModelConfig& cfg,
                       std::ostream& sink) {
  const auto gates = gates_in_schedule_order(schedule, a);
  std::set<std::size_t> conflicted;
  for (auto [i, j] : detail::tally(schedule, gates, a.gate_count, cfg).conflicts) {
    conflicted.insert(i);
    conflicted.insert(j);
  }

  const double b = cfg.buffer;
  double lo = 0, hi = 60;
  if (!schedule.empty()) {
    lo = schedule[0].arrival - b;
    hi = schedule[0].departure + b;
    for (const auto& f : schedule) {
      lo = std::min(lo, f.arrival - b);
      hi = std::max(hi, f.departure + b);
    }
  }
  lo = std::floor(lo / 60) * 60;
  hi = std::max(lo + 60, std::ceil(hi / 60) * 60);

  constexpr double width = 1200, left = 70, right = 20, top = 40, row_h = 22, bar_h = 14;
  const double plot_w = width - left - right;
  const double height = top + row_h * a.gate_count + 40;
  auto x_of = [&](double t) { return left + (t - lo) / (hi - lo) * plot_w; };

  sink << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<title>gate assignment: " << schedule.size() << " flights on " << a.gate_count
       << " gates, buffer " << format_minutes(b) << " min</title>\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";

  sink << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int g = 1; g <= a.gate_count; ++g) {
    const double y = top + row_h * (g - 1);
    sink << "<text class=\"gate\" x=\"" << left - 8 << "\" y=\"" << detail::fmt2(y + bar_h - 2)
         << "\" text-anchor=\"end\">gate " << g << "</text>\n";
  }
  for (double t = lo; t <= hi + 1e-9; t += 60) {
    sink << "<text x=\"" << detail::fmt2(x_of(t)) << "\" y=\"" << top - 10
         << "\" text-anchor=\"middle\">" << static_cast<int>(t) / 60 << "h</text>\n";
  }
  sink << "</g>\n";

  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const auto& f = schedule[i];
    const double y = top + row_h * (gates[i] - 1);
    const bool bad = conflicted.count(i) > 0;
    if (b > 0) {
      for (auto [s, e] : {std::pair{f.arrival - b, f.arrival}, std::pair{f.departure, f.departure + b}})
        sink << "<rect class=\"buffer\" x=\"" << detail::fmt2(x_of(s)) << "\" y=\""
             << detail::fmt2(y) << "\" width=\"" << detail::fmt2(x_of(e) - x_of(s))
             << "\" height=\"" << bar_h << "\" fill=\"#b8cbe8\"/>\n";
    }
    sink << "<rect class=\"" << (bad ? "bar conflict" : "bar") << "\" x=\""
         << detail::fmt2(x_of(f.arrival)) << "\" y=\"" << detail::fmt2(y) << "\" width=\""
         << detail::fmt2(x_of(f.departure) - x_of(f.arrival)) << "\" height=\"" << bar_h
         << "\" fill=\"#1f4e9c\"" << (bad ? " stroke=\"#d62728\" stroke-width=\"2\"" : "")
         << "><title>" << detail::xml_escape(f.id) << ' ' << format_minutes(f.arrival) << '-'
         << format_minutes(f.departure) << "</title></rect>\n";
  }
  sink << "</svg>\n";
  detail::check_sink(sink);
}

}  // namespace gatekeeper
