#pragma once

#define ABSUM_VERSION "0.1.0"
