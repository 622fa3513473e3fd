#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "harkit/linalg.hpp"
#include "harkit/types.hpp"

namespace harkit {

// ---------------------------------------------------------------------------
// Savitzky-Golay smoothing
// ---------------------------------------------------------------------------

/// Frame length in samples for a frame given in seconds: rounded, forced odd,
/// and at least order + 1. At 25 Hz a 0.12 s frame is 3 samples, which makes
/// the order-2 filter an exact identity on that stream.
inline std::size_t sgolay_frame_samples(double frame_s, double rate_hz, int order) {
    if (frame_s <= 0.0 || rate_hz <= 0.0) throw ConfigError("sgolay: frame and rate must be positive");
    if (order < 0) throw ConfigError("sgolay: order must be non-negative");
    long frame = std::lround(frame_s * rate_hz);
    if (frame < order + 1) frame = order + 1;
    if (frame % 2 == 0) ++frame;
    return static_cast<std::size_t>(frame);
}

/// Full projection matrix G = V (V^T V)^-1 V^T for a centered sample grid.
/// Row h is the usual smoothing kernel; the outer rows evaluate the same
/// least-squares polynomial at the edge positions.
inline Matrix sgolay_projection(std::size_t frame, int order) {
    const std::size_t terms = static_cast<std::size_t>(order) + 1;
    const double half = (static_cast<double>(frame) - 1.0) / 2.0;

    Matrix v(frame, terms);
    for (std::size_t r = 0; r < frame; ++r) {
        double p = 1.0;
        const double x = static_cast<double>(r) - half;
        for (std::size_t c = 0; c < terms; ++c) {
            v(r, c) = p;
            p *= x;
        }
    }

    Matrix vtv(terms, terms);
    for (std::size_t i = 0; i < terms; ++i)
        for (std::size_t j = 0; j < terms; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < frame; ++r) s += v(r, i) * v(r, j);
            vtv(i, j) = s;
        }

    // Columns of (V^T V)^-1 V^T, solved one frame position at a time.
    Matrix g(frame, frame);
    for (std::size_t r = 0; r < frame; ++r) {
        std::vector<double> rhs(terms);
        for (std::size_t c = 0; c < terms; ++c) rhs[c] = v(r, c);
        const std::vector<double> coef = solve_dense(vtv, rhs);
        for (std::size_t out = 0; out < frame; ++out) {
            double s = 0.0;
            for (std::size_t c = 0; c < terms; ++c) s += v(out, c) * coef[c];
            g(out, r) = s;
        }
    }
    return g;
}

/// Least-squares polynomial smoothing of one channel. Output length equals
/// input length; edge samples come from the polynomial fitted over the
/// terminal frame.
inline std::vector<double> sgolay_smooth_channel(const std::vector<double>& x,
                                                 std::size_t frame, int order) {
    if (x.size() < frame) throw DataError("sgolay: series shorter than frame");
    const Matrix g = sgolay_projection(frame, order);
    const std::size_t h = (frame - 1) / 2;
    const std::size_t n = x.size();
    std::vector<double> y(n);

    for (std::size_t i = h; i + h < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < frame; ++j) s += g(h, j) * x[i - h + j];
        y[i] = s;
    }
    for (std::size_t i = 0; i < h; ++i) {
        double lead = 0.0, trail = 0.0;
        for (std::size_t j = 0; j < frame; ++j) {
            lead += g(i, j) * x[j];
            trail += g(frame - h + i, j) * x[n - frame + j];
        }
        y[i] = lead;
        y[n - h + i] = trail;
    }
    return y;
}

inline TriaxialSeries sgolay_smooth(const TriaxialSeries& series, double frame_s = 0.12,
                                    int order = 2) {
    series.validate();
    const std::size_t frame = sgolay_frame_samples(frame_s, series.rate_hz, order);
    TriaxialSeries out = series;
    for (int a = 0; a < 3; ++a)
        out.axes[a] = sgolay_smooth_channel(series.axes[a], frame, order);
    return out;
}

// ---------------------------------------------------------------------------
// Zero-phase Butterworth high-pass
// ---------------------------------------------------------------------------

/// One digital biquad (a0 normalized to 1).
struct Biquad {
    double b0, b1, b2;
    double a1, a2;
};

/// Butterworth high-pass as cascaded biquads via the bilinear transform.
/// Even orders only; the pipeline uses order 4 throughout.
inline std::vector<Biquad> butterworth_highpass(double cutoff_hz, double rate_hz, int order) {
    if (order < 2 || order % 2 != 0) throw ConfigError("highpass: order must be a positive even number");
    if (cutoff_hz <= 0.0) throw ConfigError("highpass: cutoff must be positive");
    if (cutoff_hz >= rate_hz / 2.0) throw ConfigError("highpass: cutoff must be below the Nyquist rate");

    const double fs2 = 2.0 * rate_hz;
    const double warped = fs2 * std::tan(M_PI * cutoff_hz / rate_hz);

    std::vector<Biquad> sections;
    sections.reserve(static_cast<std::size_t>(order / 2));
    for (int k = 0; k < order / 2; ++k) {
        const double theta = M_PI * (2.0 * k + 1.0 + order) / (2.0 * order);
        const std::complex<double> lp_pole(std::cos(theta), std::sin(theta));
        const std::complex<double> hp_pole = warped / lp_pole;          // LP -> HP
        const std::complex<double> z_pole = (fs2 + hp_pole) / (fs2 - hp_pole);  // bilinear

        Biquad s{};
        s.a1 = -2.0 * z_pole.real();
        s.a2 = std::norm(z_pole);
        // Two zeros at z = +1; unit gain at the Nyquist point (z = -1).
        const double gain = (1.0 - s.a1 + s.a2) / 4.0;
        s.b0 = gain;
        s.b1 = -2.0 * gain;
        s.b2 = gain;
        sections.push_back(s);
    }
    return sections;
}

/// Steady-state filter state for a unit-amplitude step input, matching the
/// usual lfilter_zi construction for a transposed direct form II biquad.
inline std::array<double, 2> biquad_step_state(const Biquad& s) {
    // Solve (I - A) zi = B with A = [[-a1, 1], [-a2, 0]],
    // B = [b1 - b0 a1, b2 - b0 a2].
    const double b0 = s.b1 - s.b0 * s.a1;
    const double b1 = s.b2 - s.b0 * s.a2;
    const double denom = 1.0 + s.a1 + s.a2;
    const double zi0 = (b0 + b1) / denom;
    const double zi1 = b1 - s.a2 * zi0;
    return {zi0, zi1};
}

inline void biquad_filter_inplace(const Biquad& s, std::vector<double>& x, double scale) {
    const std::array<double, 2> zi = biquad_step_state(s);
    double z0 = zi[0] * scale, z1 = zi[1] * scale;
    for (double& v : x) {
        const double in = v;
        const double out = s.b0 * in + z0;
        z0 = s.b1 * in - s.a1 * out + z1;
        z1 = s.b2 * in - s.a2 * out;
        v = out;
    }
}

/// Forward-backward filtering with odd-reflection padding of pad samples per
/// side. Initial conditions are scaled step steady states, so constant inputs
/// produce an exactly constant response in each pass.
inline std::vector<double> filtfilt_channel(const std::vector<Biquad>& sections,
                                            const std::vector<double>& x, std::size_t pad) {
    const std::size_t n = x.size();
    if (n < 2) throw DataError("filtfilt: series too short");
    if (pad >= n) pad = n - 1;

    std::vector<double> ext;
    ext.reserve(n + 2 * pad);
    for (std::size_t i = 0; i < pad; ++i) ext.push_back(2.0 * x[0] - x[pad - i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::size_t i = 0; i < pad; ++i) ext.push_back(2.0 * x[n - 1] - x[n - 2 - i]);

    for (const Biquad& s : sections) biquad_filter_inplace(s, ext, ext.front());
    std::reverse(ext.begin(), ext.end());
    for (const Biquad& s : sections) biquad_filter_inplace(s, ext, ext.front());
    std::reverse(ext.begin(), ext.end());

    return std::vector<double>(ext.begin() + static_cast<std::ptrdiff_t>(pad),
                               ext.begin() + static_cast<std::ptrdiff_t>(pad + n));
}

inline std::vector<double> highpass_zero_phase_channel(const std::vector<double>& x,
                                                       double cutoff_hz, double rate_hz,
                                                       int order = 4) {
    const std::vector<Biquad> sections = butterworth_highpass(cutoff_hz, rate_hz, order);
    return filtfilt_channel(sections, x, static_cast<std::size_t>(3 * order));
}

inline TriaxialSeries highpass_zero_phase(const TriaxialSeries& series, double cutoff_hz = 0.5,
                                          int order = 4) {
    series.validate();
    TriaxialSeries out = series;
    const std::vector<Biquad> sections = butterworth_highpass(cutoff_hz, series.rate_hz, order);
    for (int a = 0; a < 3; ++a)
        out.axes[a] = filtfilt_channel(sections, series.axes[a], static_cast<std::size_t>(3 * order));
    return out;
}

}  // namespace harkit
