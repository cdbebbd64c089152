#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bruno/bruno_complex.hpp"
#include "bruno/dynamics.hpp"
#include "bruno/spectral.hpp"

namespace bruno {

/// Shortest decimal that round-trips a double (17 significant digits).
std::string format_double(double v);

/// Files carry one comment line "# config <fingerprint>" before the
/// header; a loader only accepts a file whose fingerprint matches.
void write_bruno_csv(std::ostream& os, const std::vector<GridRow>& rows,
                     const std::string& fingerprint);
void write_logu_csv(std::ostream& os, double t, const std::vector<std::complex<double>>& values,
                    const std::string& fingerprint);
void write_h_csv(std::ostream& os, const std::vector<HSample>& samples,
                 const std::string& fingerprint);
void write_spectrum_csv(std::ostream& os, const Spectrum& s, const std::string& fingerprint);
void write_xy_csv(std::ostream& os, const std::string& header, const std::vector<double>& xs,
                  const std::vector<double>& ys, const std::string& fingerprint);

struct HGridFile {
    std::string fingerprint;
    std::vector<HSample> samples;
};

/// Parses a file written by write_h_csv; std::nullopt when the file does
/// not exist or is malformed.
std::optional<HGridFile> read_h_csv(const std::filesystem::path& path);

std::optional<Spectrum> read_spectrum_csv(const std::filesystem::path& path,
                                          const std::string& expected_fingerprint);

/// Stable short hex digest (FNV-1a) used to derive cache file names.
std::string fingerprint_digest(const std::string& fingerprint);

}  // namespace bruno
