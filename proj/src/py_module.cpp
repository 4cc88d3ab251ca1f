#include <pybind11/pybind11.h>
PYBIND11_MODULE(koch24, m) {}
