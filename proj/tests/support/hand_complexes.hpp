#pragma once

#include <string>

#include "specta/topology/cell_complex.hpp"

namespace specta::testing {

inline topology::CellComplex complexFrom(const std::string& text) {
  return topology::parseComplex(text);
}

// Unit interval: 0-cells 0 (at 0) and 1 (at 1), 1-cell 2.
inline topology::CellComplex interval(bool left, bool right) {
  return complexFrom(std::string("complex ambient=1 bounded=1\n") +
                     "cell 0 dim=0 inM=" + (left ? "1" : "0") + "\n" +
                     "cell 1 dim=0 inM=" + (right ? "1" : "0") + "\n" +
                     "cell 2 dim=1 inM=1\n"
                     "face 0 2\nface 1 2\n");
}

inline topology::CellComplex circle() {
  return complexFrom(
      "complex ambient=2 bounded=1\n"
      "cell 0 dim=0 inM=1\ncell 1 dim=0 inM=1\ncell 2 dim=1 inM=1\ncell 3 dim=1 inM=1\n"
      "face 0 2\nface 1 2\nface 0 3\nface 1 3\n");
}

// Disk: boundary vertices 0 = (1,0) and 1 = (-1,0), arcs 2 and 3, open 2-cell 4.
inline std::string diskText(bool closedBoundary, bool pointOn) {
  std::string b = closedBoundary ? "1" : "0";
  std::string p = (closedBoundary || pointOn) ? "1" : "0";
  return "complex ambient=2 bounded=1\n"
         "cell 0 dim=0 inM=" + p + "\ncell 1 dim=0 inM=" + b + "\n" +
         "cell 2 dim=1 inM=" + b + "\ncell 3 dim=1 inM=" + b + "\n" +
         "cell 4 dim=2 inM=1\n"
         "face 0 2\nface 1 2\nface 0 3\nface 1 3\nface 2 4\nface 3 4\n";
}

inline topology::CellComplex closedDisk() { return complexFrom(diskText(true, false)); }
inline topology::CellComplex openDisk() { return complexFrom(diskText(false, false)); }
inline topology::CellComplex openDiskWithBoundaryPoint() { return complexFrom(diskText(false, true)); }

// Open disk plus a point away from its closure (cell 5).
inline topology::CellComplex openDiskWithIsolatedPoint() {
  return complexFrom(diskText(false, false) + "cell 5 dim=0 inM=1\n");
}

// Closed disk with a whisker 1-cell 5 from the boundary vertex 0 to vertex 6.
inline topology::CellComplex closedDiskWithWhisker() {
  return complexFrom(diskText(true, false) +
                     "cell 5 dim=1 inM=1\ncell 6 dim=0 inM=1\nface 0 5\nface 6 5\n");
}

}  // namespace specta::testing
