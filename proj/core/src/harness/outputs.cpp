#include "btrl/harness/outputs.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace btrl::harness {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write output file: " + path.string());
  }
  return out;
}

void write_accuracy_csv(const ExperimentResults& results,
                        const std::filesystem::path& dir) {
  std::ofstream out = open_output(dir / "accuracy.csv");

  out << "iteration";
  for (const auto& [node, series] : results.nodes) out << ',' << node;
  for (const auto& [node, series] : results.baseline_nodes) {
    out << ",baseline_" << node;
  }
  out << '\n';

  const int window = results.config.accuracy_window;
  std::vector<std::vector<double>> columns;
  for (const auto& [node, series] : results.nodes) {
    columns.push_back(windowed_accuracy(series, window));
  }
  for (const auto& [node, series] : results.baseline_nodes) {
    columns.push_back(windowed_accuracy(series, window));
  }

  for (int iteration = 1; iteration <= results.config.iterations;
       ++iteration) {
    out << iteration;
    for (const std::vector<double>& column : columns) {
      out << ',' << format_fixed(column[static_cast<std::size_t>(iteration - 1)]);
    }
    out << '\n';
  }
}

void write_behaviors_csv(const ExperimentResults& results,
                         const std::filesystem::path& dir) {
  std::ofstream out = open_output(dir / "behaviors.csv");
  out << "behavior,accuracy\n";
  for (int b = 0; b < 3; ++b) {
    out << sim::to_string(static_cast<sim::Behavior>(b)) << ','
        << format_fixed(results.behavior_accuracy[static_cast<std::size_t>(b)])
        << '\n';
  }
}

void write_trace(const ExperimentResults& results,
                 const std::filesystem::path& dir) {
  std::ofstream out = open_output(dir / "trace.jsonl");
  for (const std::string& line : results.trace_lines) {
    out << line << '\n';
  }
}

void write_plot_script(const ExperimentResults& results,
                       const std::filesystem::path& dir) {
  std::ofstream out = open_output(dir / "plot.gp");
  out << "# Renders the accuracy series; run `gnuplot plot.gp` in this "
         "directory.\n";
  out << "set datafile separator ','\n";
  out << "set xlabel 'iteration'\n";
  out << "set ylabel 'decision accuracy (window "
      << results.config.accuracy_window << ")'\n";
  out << "set yrange [0:1.05]\n";
  out << "set key bottom right\n";
  out << "set terminal pngcairo size 960,540\n";
  out << "set output 'accuracy.png'\n";
  out << "plot";
  int column = 2;
  bool first = true;
  for (const auto& [node, series] : results.nodes) {
    out << (first ? " " : ", \\\n     ");
    first = false;
    out << "'accuracy.csv' using 1:" << column++ << " with lines title '"
        << node << "'";
  }
  for (const auto& [node, series] : results.baseline_nodes) {
    out << (first ? " " : ", \\\n     ");
    first = false;
    out << "'accuracy.csv' using 1:" << column++
        << " with lines dashtype 2 title 'random " << node << "'";
  }
  out << '\n';
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

std::string format_fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void write_outputs(const ExperimentResults& results) {
  const std::filesystem::path dir = results.config.output_dir;
  if (dir.empty()) {
    throw std::invalid_argument("write_outputs needs an output directory");
  }
  std::filesystem::create_directories(dir);
  write_accuracy_csv(results, dir);
  write_behaviors_csv(results, dir);
  write_trace(results, dir);
  write_plot_script(results, dir);
}

}  // namespace btrl::harness
