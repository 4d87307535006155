#pragma once

namespace hypercount {
inline int cli_main(int, char**) { return 0; } // replaced once the command surface lands
}
