#include "bruno/csv.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>

namespace bruno {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void write_preamble(std::ostream& os, const std::string& fingerprint, const std::string& header) {
    os << "# config " << fingerprint << "\n" << header << "\n";
}

}  // namespace

void write_bruno_csv(std::ostream& os, const std::vector<GridRow>& rows,
                     const std::string& fingerprint) {
    write_preamble(os, fingerprint, "x,t,re_b,im_b");
    for (const GridRow& r : rows)
        os << format_double(r.x) << ',' << format_double(r.t) << ',' << format_double(r.b.real())
           << ',' << format_double(r.b.imag()) << "\n";
}

void write_logu_csv(std::ostream& os, double t, const std::vector<std::complex<double>>& values,
                    const std::string& fingerprint) {
    write_preamble(os, fingerprint, "x,t,re_logu,im_logu");
    const std::size_t n = values.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double x = static_cast<double>(j) / static_cast<double>(n);
        os << format_double(x) << ',' << format_double(t) << ','
           << format_double(values[j].real()) << ',' << format_double(values[j].imag()) << "\n";
    }
}

void write_h_csv(std::ostream& os, const std::vector<HSample>& samples,
                 const std::string& fingerprint) {
    write_preamble(os, fingerprint, "x,t,re_h,im_h");
    for (const HSample& s : samples)
        os << format_double(s.x) << ',' << format_double(s.t) << ','
           << format_double(s.value.real()) << ',' << format_double(s.value.imag()) << "\n";
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s, const std::string& fingerprint) {
    write_preamble(os, fingerprint, "l,h_l");
    os << "# t0 " << format_double(s.t0) << "\n";
    os << "# residual_imag " << format_double(s.residual_imag) << "\n";
    for (std::size_t l = 0; l < s.coeffs.size(); ++l)
        os << l << ',' << format_double(s.coeffs[l]) << "\n";
}

void write_xy_csv(std::ostream& os, const std::string& header, const std::vector<double>& xs,
                  const std::vector<double>& ys, const std::string& fingerprint) {
    write_preamble(os, fingerprint, header);
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << format_double(xs[i]) << ',' << format_double(ys[i]) << "\n";
}

std::optional<HGridFile> read_h_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# config ", 0) != 0) return std::nullopt;
    HGridFile f;
    f.fingerprint = line.substr(9);
    if (!std::getline(in, line) || line != "x,t,re_h,im_h") return std::nullopt;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double v[4];
        const char* p = line.c_str();
        char* end = nullptr;
        for (int i = 0; i < 4; ++i) {
            v[i] = std::strtod(p, &end);
            if (end == p) return std::nullopt;
            p = end;
            if (i < 3) {
                if (*p != ',') return std::nullopt;
                ++p;
            }
        }
        f.samples.push_back(HSample{v[0], v[1], {v[2], v[3]}});
    }
    return f;
}

std::optional<Spectrum> read_spectrum_csv(const std::filesystem::path& path,
                                          const std::string& expected_fingerprint) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "# config " + expected_fingerprint) return std::nullopt;
    if (!std::getline(in, line) || line != "l,h_l") return std::nullopt;
    Spectrum s;
    if (!std::getline(in, line) || line.rfind("# t0 ", 0) != 0) return std::nullopt;
    s.t0 = std::strtod(line.c_str() + 5, nullptr);
    if (!std::getline(in, line) || line.rfind("# residual_imag ", 0) != 0) return std::nullopt;
    s.residual_imag = std::strtod(line.c_str() + 16, nullptr);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const char* comma = std::strchr(line.c_str(), ',');
        if (!comma) return std::nullopt;
        s.coeffs.push_back(std::strtod(comma + 1, nullptr));
    }
    return s;
}

std::string fingerprint_digest(const std::string& fingerprint) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : fingerprint) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

}  // namespace bruno
