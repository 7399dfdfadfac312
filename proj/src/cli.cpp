#include "mmx/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mmx/csv.hpp"
#include "mmx/indicator.hpp"
#include "mmx/rolling.hpp"
#include "mmx/signals.hpp"
#include "mmx/svg.hpp"

namespace mmx::cli {
namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
    std::string input = "-";
    std::string price_col = "close";
    std::string time_col;
    std::string delimiter = ",";
    bool no_header = false;
    int m = 5;
    std::string direction = "both";
    std::string output = "-";
    std::string format = "csv";
    int precision = 12;
};

struct RollOpts {
    std::size_t window = 0;
    std::size_t hop = 1;
};

struct SignalOpts {
    std::size_t ma_period = 0;  // 0 means not given
    bool crossings = false;
    bool spindle = false;
    bool extrema = false;
    double band = 0.5;
    std::size_t min_len = 0;  // 0 means 2 * m
    std::size_t min_crossings = 3;
    double prominence = 0.0;
};

struct PlotOpts {
    int svg_width = 960;
    int svg_height = 600;
};

CLI::Option* add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-i,--input", o.input, "input CSV path, - for stdin")->capture_default_str();
    cmd->add_option("--price-col", o.price_col, "price column name or 1-based index")
        ->capture_default_str();
    cmd->add_option("--time-col", o.time_col,
                    "timestamp column name or 1-based index (default: auto-detect by name)");
    cmd->add_option("--delimiter", o.delimiter, "field delimiter, \\t for tab")
        ->capture_default_str()
        ->check(
            [](const std::string& v) -> std::string {
                if (v.size() == 1 || v == "\\t") return {};
                return "delimiter must be a single character";
            },
            "CHAR");
    cmd->add_flag("--no-header", o.no_header, "input has no header row");
    cmd->add_option("-m,--m", o.m, "smoothing width (neighbor reach)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--direction", o.direction, "which weight profiles to compute")
        ->capture_default_str()
        ->check(CLI::IsMember({"up", "down", "both"}));
    cmd->add_option("-o,--output", o.output, "output path, - for stdout")->capture_default_str();
    cmd->add_option("--precision", o.precision, "fraction digits in csv output")
        ->capture_default_str()
        ->check(CLI::Range(1, 17));
    return cmd->add_option("-f,--format", o.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json", "svg"}));
}

InputSpec input_spec(const CommonOpts& o) {
    InputSpec spec;
    spec.path = o.input;
    spec.price_col = o.price_col;
    spec.time_col = o.time_col;
    spec.delimiter = o.delimiter == "\\t" ? '\t' : o.delimiter[0];
    spec.header = !o.no_header;
    return spec;
}

std::string fixed_str(double v, int precision) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

// Integral positions print as integers; interpolated ones keep fractions.
std::string pos_str(double v, int precision) {
    if (v == std::floor(v) && std::fabs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    return fixed_str(v, precision);
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::domain_error("cannot open output file '" + path + "'");
    file << content;
    file.flush();
    if (!file) throw std::domain_error("failed writing output file '" + path + "'");
}

ordered_json base_metadata(const char* command, const CommonOpts& o, std::size_t n) {
    ordered_json meta;
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["m"] = o.m;
    meta["direction"] = o.direction;
    meta["n"] = n;
    meta["precision"] = o.precision;
    return meta;
}

const MiniMaxSeries* ptr(const std::optional<MiniMaxSeries>& mm) {
    return mm ? &*mm : nullptr;
}

int do_compute(const CommonOpts& o, const PlotOpts* plot, std::ostream& out) {
    const PriceSeries s = ingest_csv(input_spec(o));
    std::optional<MiniMaxSeries> up;
    std::optional<MiniMaxSeries> down;
    if (o.direction != "down") up = minimax(s, IndicatorParams{o.m, Direction::Up});
    if (o.direction != "up") down = minimax(s, IndicatorParams{o.m, Direction::Down});
    const std::size_t n = s.values.size();

    std::string text;
    if (o.format == "svg") {
        SvgOptions svg;
        if (plot != nullptr) svg = SvgOptions{plot->svg_width, plot->svg_height};
        text = render_minimax_svg(s, ptr(up), ptr(down), svg);
    } else if (o.format == "json") {
        ordered_json doc;
        doc["metadata"] = base_metadata(plot != nullptr ? "plot" : "compute", o, n);
        ordered_json index = ordered_json::array();
        for (std::size_t i = 0; i < n; ++i) index.push_back(i + 1);
        doc["index"] = std::move(index);
        if (s.has_timestamps()) doc["timestamp"] = s.timestamps;
        doc["price"] = s.values;
        if (up) doc["up"] = up->weights;
        if (down) doc["down"] = down->weights;
        text = doc.dump(2) + "\n";
    } else {
        text = "index";
        if (s.has_timestamps()) text += ",timestamp";
        text += ",price";
        if (up) text += ",u";
        if (down) text += ",d";
        text += '\n';
        for (std::size_t i = 0; i < n; ++i) {
            text += std::to_string(i + 1);
            if (s.has_timestamps()) text += ',' + fixed_str(s.timestamps[i], o.precision);
            text += ',' + fixed_str(s.values[i], o.precision);
            if (up) text += ',' + fixed_str(up->weights[i], o.precision);
            if (down) text += ',' + fixed_str(down->weights[i], o.precision);
            text += '\n';
        }
    }
    write_output(o.output, text, out);
    return 0;
}

int do_roll(const CommonOpts& o, const RollOpts& r, std::ostream& out) {
    if (o.format == "svg")
        throw std::invalid_argument("svg output is only available for compute and plot");
    if (r.window < 2)
        throw std::invalid_argument("rolling window must cover at least 2 samples, got " +
                                    std::to_string(r.window));
    const PriceSeries s = ingest_csv(input_spec(o));
    const std::size_t n = s.values.size();
    if (n < r.window)
        throw std::domain_error("series of length " + std::to_string(n) +
                                " is shorter than rolling window " + std::to_string(r.window));

    std::optional<RollingResult> up;
    std::optional<RollingResult> down;
    RollingConfig cfg{r.window, r.hop, IndicatorParams{o.m, Direction::Up}};
    if (o.direction != "down") up = rolling_minimax(s, cfg);
    cfg.params.direction = Direction::Down;
    if (o.direction != "up") down = rolling_minimax(s, cfg);
    const std::vector<RollingWindow>& ref = up ? up->windows : down->windows;

    std::string text;
    if (o.format == "json") {
        ordered_json doc;
        doc["metadata"] = base_metadata("roll", o, n);
        doc["metadata"]["window"] = r.window;
        doc["metadata"]["hop"] = r.hop;
        ordered_json windows = ordered_json::array();
        for (std::size_t k = 0; k < ref.size(); ++k) {
            const std::size_t start = ref[k].start_pos;
            ordered_json jw;
            jw["start"] = start;
            jw["end"] = start + r.window - 1;
            ordered_json price = ordered_json::array();
            for (std::size_t j = 0; j < r.window; ++j) price.push_back(s.values[start - 1 + j]);
            jw["price"] = std::move(price);
            if (up) jw["up"] = up->windows[k].minimax.weights;
            if (down) jw["down"] = down->windows[k].minimax.weights;
            windows.push_back(std::move(jw));
        }
        doc["windows"] = std::move(windows);
        text = doc.dump(2) + "\n";
    } else {
        text = "window,start,end,index,price";
        if (up) text += ",u";
        if (down) text += ",d";
        text += '\n';
        for (std::size_t k = 0; k < ref.size(); ++k) {
            const std::size_t start = ref[k].start_pos;
            for (std::size_t j = 0; j < r.window; ++j) {
                text += std::to_string(k + 1);
                text += ',' + std::to_string(start);
                text += ',' + std::to_string(start + r.window - 1);
                text += ',' + std::to_string(start + j);
                text += ',' + fixed_str(s.values[start - 1 + j], o.precision);
                if (up) text += ',' + fixed_str(up->windows[k].minimax.weights[j], o.precision);
                if (down) text += ',' + fixed_str(down->windows[k].minimax.weights[j], o.precision);
                text += '\n';
            }
        }
    }
    write_output(o.output, text, out);
    return 0;
}

struct EventRow {
    double order = 0.0;
    std::string kind;
    std::string index;
    std::string end_index;
    std::string sign;
    std::string score;
    ordered_json json;
};

int do_signals(const CommonOpts& o, const SignalOpts& so, std::ostream& out) {
    if (o.format == "svg")
        throw std::invalid_argument("svg output is only available for compute and plot");
    const bool any_toggle = so.crossings || so.spindle || so.extrema;
    const bool ma_given = so.ma_period > 0;
    const bool run_crossings = so.crossings || (!any_toggle && ma_given);
    const bool run_spindle = so.spindle || !any_toggle;
    const bool run_extrema = so.extrema;
    if (run_crossings && !ma_given)
        throw std::invalid_argument("--crossings requires --ma-period");

    const PriceSeries s = ingest_csv(input_spec(o));
    const std::size_t n = s.values.size();

    ordered_json meta = base_metadata("signals", o, n);
    meta["direction"] = "both";
    std::vector<EventRow> rows;

    if (run_crossings) {
        meta["ma_period"] = so.ma_period;
        for (const CrossingEvent& e : support_resistance_pipeline(s, o.m, so.ma_period)) {
            EventRow row;
            row.order = e.position;
            row.kind = e.kind == CrossingKind::Resistance ? "resistance" : "support";
            row.index = pos_str(e.position, o.precision);
            row.sign = e.sign == CrossingSign::UpThrough ? "up_through" : "down_through";
            row.json["kind"] = row.kind;
            row.json["index"] = e.position;
            row.json["sign"] = row.sign;
            rows.push_back(std::move(row));
        }
    }
    if (run_spindle || run_extrema) {
        const MiniMaxSeries up = minimax(s, IndicatorParams{o.m, Direction::Up});
        const MiniMaxSeries down = minimax(s, IndicatorParams{o.m, Direction::Down});
        if (run_spindle) {
            SpindleConfig cfg = default_spindle_config(o.m);
            cfg.band = so.band;
            if (so.min_len > 0) cfg.min_len = so.min_len;
            cfg.min_crossings = so.min_crossings;
            meta["band"] = cfg.band;
            meta["min_len"] = cfg.min_len;
            meta["min_crossings"] = cfg.min_crossings;
            for (const SpindleInterval& iv : detect_spindle(up, down, cfg)) {
                EventRow row;
                row.order = static_cast<double>(iv.start_pos);
                row.kind = "spindle";
                row.index = std::to_string(iv.start_pos);
                row.end_index = std::to_string(iv.end_pos);
                row.score = fixed_str(iv.score, o.precision);
                row.json["kind"] = row.kind;
                row.json["index"] = iv.start_pos;
                row.json["end_index"] = iv.end_pos;
                row.json["score"] = iv.score;
                rows.push_back(std::move(row));
            }
        }
        if (run_extrema) {
            meta["prominence"] = so.prominence;
            for (const MiniMaxSeries* mm : {&up, &down}) {
                for (const ExtremumPoint& p : extract_extrema(*mm, so.prominence)) {
                    EventRow row;
                    row.order = static_cast<double>(p.position);
                    row.kind = p.kind == ExtremumKind::Peak ? "peak" : "trough";
                    row.index = std::to_string(p.position);
                    row.score = fixed_str(p.weight, o.precision);
                    row.json["kind"] = row.kind;
                    row.json["index"] = p.position;
                    row.json["score"] = p.weight;
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const EventRow& a, const EventRow& b) { return a.order < b.order; });

    std::string text;
    if (o.format == "json") {
        ordered_json doc;
        doc["metadata"] = std::move(meta);
        ordered_json events = ordered_json::array();
        for (EventRow& row : rows) events.push_back(std::move(row.json));
        doc["events"] = std::move(events);
        text = doc.dump(2) + "\n";
    } else {
        text = "kind,index,end_index,sign,score\n";
        for (const EventRow& row : rows) {
            text += row.kind + ',' + row.index + ',' + row.end_index + ',' + row.sign + ',' +
                    row.score + '\n';
        }
    }
    write_output(o.output, text, out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"moving mini-max: turning-point weight profiles for price series", "mmx"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("mmx ") + kVersion);

    CommonOpts compute_opts;
    CLI::App* compute = app.add_subcommand("compute", "weight profiles for a full series");
    add_common(compute, compute_opts);

    CommonOpts roll_common;
    RollOpts roll_opts;
    CLI::App* roll = app.add_subcommand("roll", "weight profiles over sliding windows");
    add_common(roll, roll_common);
    roll->add_option("--window", roll_opts.window, "samples per window")->required();
    roll->add_option("--hop", roll_opts.hop, "samples between window starts")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    CommonOpts sig_common;
    SignalOpts sig_opts;
    CLI::App* signals =
        app.add_subcommand("signals", "crossing, spindle, and extremum events (both directions)");
    add_common(signals, sig_common);
    signals->add_option("--ma-period", sig_opts.ma_period, "moving-average period for crossings")
        ->check(CLI::PositiveNumber);
    signals->add_flag("--crossings", sig_opts.crossings, "detect support/resistance crossings");
    signals->add_flag("--spindle", sig_opts.spindle, "detect spindle intervals");
    signals->add_flag("--extrema", sig_opts.extrema, "detect weight-profile extrema");
    signals->add_option("--band", sig_opts.band, "spindle band in units of 1/n")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    signals->add_option("--min-len", sig_opts.min_len, "minimum spindle length (default: 2*m)")
        ->check(CLI::PositiveNumber);
    signals
        ->add_option("--min-crossings", sig_opts.min_crossings,
                     "minimum sign changes inside a spindle")
        ->capture_default_str();
    signals->add_option("--prominence", sig_opts.prominence, "minimum extremum prominence")
        ->capture_default_str();

    CommonOpts plot_common;
    PlotOpts plot_opts;
    CLI::App* plot = app.add_subcommand("plot", "price and weight chart as svg");
    CLI::Option* plot_format = add_common(plot, plot_common);
    plot->add_option("--svg-width", plot_opts.svg_width, "canvas width in px")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    plot->add_option("--svg-height", plot_opts.svg_height, "canvas height in px")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return do_compute(compute_opts, nullptr, out);
        if (roll->parsed()) return do_roll(roll_common, roll_opts, out);
        if (signals->parsed()) return do_signals(sig_common, sig_opts, out);
        if (plot->parsed()) {
            if (plot_format->count() > 0 && plot_common.format != "svg")
                throw std::invalid_argument("plot always writes svg output");
            plot_common.format = "svg";
            return do_compute(plot_common, &plot_opts, out);
        }
        throw std::logic_error("no subcommand parsed");
    } catch (const std::domain_error& e) {
        err << "data error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mmx::cli
