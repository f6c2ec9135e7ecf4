#include "windcorr/matrices.hpp"

#include "windcorr/errors.hpp"

namespace windcorr {

const char* matrix_source_name(MatrixSource source) {
  switch (source) {
    case MatrixSource::raw: return "raw";
    case MatrixSource::reduced: return "reduced";
    case MatrixSource::deviation: return "deviation";
  }
  return "unknown";
}

MatrixSource matrix_source_from_name(std::string_view name) {
  if (name == "raw") return MatrixSource::raw;
  if (name == "reduced") return MatrixSource::reduced;
  if (name == "deviation") return MatrixSource::deviation;
  throw Error("unknown matrix source '" + std::string(name) + "'");
}

}  // namespace windcorr
