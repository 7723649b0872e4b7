#pragma once

#include <stdexcept>
#include <string>

namespace qn {

// Failure categories, doubling as CLI exit codes.
enum class ErrorCode {
  Config = 2,     // bad configuration or parameters
  Data = 3,       // unusable input data
  Numerical = 4,  // numerical breakdown
  External = 5,   // external process failed or produced garbage
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(ErrorCode::Config, m) {}
};

struct DataError : Error {
  explicit DataError(const std::string& m) : Error(ErrorCode::Data, m) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error(ErrorCode::Data, m) {}
};

// A voxel is masked in every image and no fallback was requested.
struct AllMasked : Error {
  explicit AllMasked(std::size_t voxel)
      : Error(ErrorCode::Data, "voxel " + std::to_string(voxel) + " is masked in every image"),
        voxel(voxel) {}
  std::size_t voxel;
};

struct SpecInvalid : Error {
  explicit SpecInvalid(const std::string& m) : Error(ErrorCode::Data, m) {}
};

struct ManifestError : Error {
  explicit ManifestError(const std::string& m) : Error(ErrorCode::Data, m) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& m) : Error(ErrorCode::Numerical, m) {}
};

struct NonFinite : Error {
  explicit NonFinite(const std::string& m) : Error(ErrorCode::Numerical, m) {}
};

struct SvdFailure : Error {
  explicit SvdFailure(const std::string& m) : Error(ErrorCode::Numerical, m) {}
};

struct ProcessFailure : Error {
  explicit ProcessFailure(const std::string& m) : Error(ErrorCode::External, m) {}
};

struct ParseFailure : Error {
  explicit ParseFailure(const std::string& m) : Error(ErrorCode::External, m) {}
};

}  // namespace qn
