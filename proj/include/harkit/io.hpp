#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "harkit/types.hpp"

namespace harkit {

namespace csv {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

inline double parse_double(const std::string& field, const std::string& file, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw DataError(file + ":" + std::to_string(line_no) + ": cannot parse number '" + field + "'");
    }
}

/// Round-trippable fixed formatting so outputs are byte-stable per run.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace csv

// ---------------------------------------------------------------------------
// Sensor and annotation CSV
// ---------------------------------------------------------------------------

/// Sensor CSV: header `t,x,y,z`, timestamps in seconds, accelerations in g.
/// Irregular sampling (any period deviating more than 10% from the nominal
/// one) is rejected; rates within 0.1% of an integer are snapped to it.
inline TriaxialSeries load_sensor_csv(const std::string& path, SensorId sensor) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open sensor file " + path);

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw DataError(path + ": empty series");
    ++line_no;
    if (csv::split(line) != std::vector<std::string>{"t", "x", "y", "z"})
        throw DataError(path + ": expected header 't,x,y,z'");

    std::vector<double> t;
    TriaxialSeries series;
    series.sensor_id = sensor;
    while (std::getline(in, line)) {
        ++line_no;
        if (csv::trim(line).empty()) continue;
        const auto fields = csv::split(line);
        if (fields.size() != 4)
            throw DataError(path + ":" + std::to_string(line_no) + ": expected 4 fields");
        t.push_back(csv::parse_double(fields[0], path, line_no));
        for (int a = 0; a < 3; ++a)
            series.axes[a].push_back(csv::parse_double(fields[a + 1], path, line_no));
    }
    if (t.empty()) throw DataError(path + ": empty series");
    if (t.size() == 1) throw DataError(path + ": series needs at least two samples");

    std::vector<double> diffs(t.size() - 1);
    for (std::size_t i = 1; i < t.size(); ++i) {
        diffs[i - 1] = t[i] - t[i - 1];
        if (diffs[i - 1] <= 0.0)
            throw DataError(path + ":" + std::to_string(i + 2) + ": non-monotone timestamps");
    }
    std::vector<double> sorted = diffs;
    std::sort(sorted.begin(), sorted.end());
    const double nominal = sorted[sorted.size() / 2];
    for (std::size_t i = 0; i < diffs.size(); ++i)
        if (std::fabs(diffs[i] - nominal) > 0.10 * nominal)
            throw DataError(path + ":" + std::to_string(i + 3) + ": irregular sampling period");

    double rate = 1.0 / nominal;
    if (std::fabs(rate - std::round(rate)) < 1e-3 * rate) rate = std::round(rate);
    series.rate_hz = rate;
    series.start_time = t.front();
    series.validate();
    return series;
}

/// Annotation CSV: header `start,end,label` with lower_snake_case fine labels.
inline AnnotationTrack load_annotation_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open annotation file " + path);

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw DataError(path + ": empty annotation file");
    ++line_no;
    if (csv::split(line) != std::vector<std::string>{"start", "end", "label"})
        throw DataError(path + ": expected header 'start,end,label'");

    AnnotationTrack track;
    while (std::getline(in, line)) {
        ++line_no;
        if (csv::trim(line).empty()) continue;
        const auto fields = csv::split(line);
        if (fields.size() != 3)
            throw DataError(path + ":" + std::to_string(line_no) + ": expected 3 fields");
        AnnotationInterval iv;
        iv.start_s = csv::parse_double(fields[0], path, line_no);
        iv.end_s = csv::parse_double(fields[1], path, line_no);
        try {
            iv.label = parse_fine(fields[2]);
        } catch (const DataError& e) {
            throw DataError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        track.intervals.push_back(iv);
    }
    std::sort(track.intervals.begin(), track.intervals.end(),
              [](const AnnotationInterval& a, const AnnotationInterval& b) {
                  return a.start_s < b.start_s;
              });
    track.validate();
    return track;
}

inline RecordingSession load_session(const std::string& thigh_csv, const std::string& back_csv,
                                     const std::string& annot_csv,
                                     const std::string& participant_id = "") {
    RecordingSession session;
    session.participant_id = participant_id;
    session.thigh = load_sensor_csv(thigh_csv, SensorId::UpperThigh);
    session.back = load_sensor_csv(back_csv, SensorId::LowerBack);
    session.annotations = load_annotation_csv(annot_csv);
    return session;
}

inline void write_sensor_csv(const std::string& path, const TriaxialSeries& series) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << "t,x,y,z\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double t = series.start_time + static_cast<double>(i) / series.rate_hz;
        out << csv::format_double(t) << ',' << csv::format_double(series.axes[0][i]) << ','
            << csv::format_double(series.axes[1][i]) << ','
            << csv::format_double(series.axes[2][i]) << '\n';
    }
}

inline void write_annotation_csv(const std::string& path, const AnnotationTrack& track) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << "start,end,label\n";
    for (const auto& iv : track.intervals)
        out << csv::format_double(iv.start_s) << ',' << csv::format_double(iv.end_s) << ','
            << fine_name(iv.label) << '\n';
}

// ---------------------------------------------------------------------------
// Long-format window CSV (real and synthetic windows share one schema)
// ---------------------------------------------------------------------------

inline constexpr std::array<const char*, 6> kChannelNames = {
    "thigh_x", "thigh_y", "thigh_z", "back_x", "back_y", "back_z"};

inline const std::vector<double>& window_channel(const LabeledWindow& w, int channel) {
    return channel < 3 ? w.thigh.axes[channel] : w.back.axes[channel - 3];
}

inline std::vector<double>& window_channel(LabeledWindow& w, int channel) {
    return channel < 3 ? w.thigh.axes[channel] : w.back.axes[channel - 3];
}

inline void write_windows_csv(const std::string& path, const std::vector<LabeledWindow>& windows) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << "window_id,participant,label,origin,channel,sample_index,value\n";
    for (std::size_t id = 0; id < windows.size(); ++id) {
        const LabeledWindow& w = windows[id];
        const char* origin = w.origin == WindowOrigin::Real ? "real" : "synthetic";
        for (int c = 0; c < 6; ++c) {
            const auto& axis = window_channel(w, c);
            for (std::size_t i = 0; i < axis.size(); ++i)
                out << id << ',' << w.participant_id << ',' << fine_name(w.label) << ',' << origin
                    << ',' << kChannelNames[c] << ',' << i << ',' << csv::format_double(axis[i])
                    << '\n';
        }
    }
}

inline std::vector<LabeledWindow> load_windows_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open windows file " + path);
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw DataError(path + ": empty windows file");
    ++line_no;
    if (csv::split(line) !=
        std::vector<std::string>{"window_id", "participant", "label", "origin", "channel",
                                 "sample_index", "value"})
        throw DataError(path + ": unexpected windows header");

    std::vector<LabeledWindow> windows;
    long current_id = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (csv::trim(line).empty()) continue;
        const auto fields = csv::split(line);
        if (fields.size() != 7)
            throw DataError(path + ":" + std::to_string(line_no) + ": expected 7 fields");
        const long id = std::lround(csv::parse_double(fields[0], path, line_no));
        if (id != current_id) {
            if (id != current_id + 1)
                throw DataError(path + ":" + std::to_string(line_no) + ": window ids must be contiguous");
            current_id = id;
            LabeledWindow w;
            w.participant_id = fields[1];
            w.label = parse_fine(fields[2]);
            if (fields[3] == "real") w.origin = WindowOrigin::Real;
            else if (fields[3] == "synthetic") w.origin = WindowOrigin::Synthetic;
            else throw DataError(path + ":" + std::to_string(line_no) + ": bad origin");
            windows.push_back(std::move(w));
        }
        int channel = -1;
        for (int c = 0; c < 6; ++c)
            if (fields[4] == kChannelNames[c]) channel = c;
        if (channel < 0) throw DataError(path + ":" + std::to_string(line_no) + ": bad channel");
        window_channel(windows.back(), channel)
            .push_back(csv::parse_double(fields[6], path, line_no));
    }
    for (const auto& w : windows) w.validate();
    return windows;
}

}  // namespace harkit
