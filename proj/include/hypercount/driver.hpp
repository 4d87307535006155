#pragma once

namespace hypercount {
int cli_main(int argc, char** argv);
}

#include "hypercount/driver_impl.hpp"
