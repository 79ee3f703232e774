"""Primitive polynomial tables over GF(2), degrees 3..13.

Generated by scripts/gen_primitive_tables.py; do not edit by hand.
Polynomials are encoded as integers with bit i holding the
coefficient of x**i, so x**3 + x + 1 is 0b1011 = 0xb.  Each tuple
lists every primitive polynomial of its degree in ascending
encoding order.
"""

# prime factorizations of 2**n - 1 (order tests and table checksums)
MERSENNE_FACTORS = {
    3: (7,),
    4: (3, 5),
    5: (31,),
    6: (3, 7),
    7: (127,),
    8: (3, 5, 17),
    9: (7, 73),
    10: (3, 11, 31),
    11: (23, 89),
    12: (3, 5, 7, 13),
    13: (8191,),
}

PRIMITIVE_POLYS = {
    3: (
        0xb, 0xd,
    ),
    4: (
        0x13, 0x19,
    ),
    5: (
        0x25, 0x29, 0x2f, 0x37, 0x3b, 0x3d,
    ),
    6: (
        0x43, 0x5b, 0x61, 0x67, 0x6d, 0x73,
    ),
    7: (
        0x83, 0x89, 0x8f, 0x91, 0x9d, 0xa7, 0xab, 0xb9, 0xbf, 0xc1,
        0xcb, 0xd3, 0xd5, 0xe5, 0xef, 0xf1, 0xf7, 0xfd,
    ),
    8: (
        0x11d, 0x12b, 0x12d, 0x14d, 0x15f, 0x163, 0x165, 0x169, 0x171, 0x187,
        0x18d, 0x1a9, 0x1c3, 0x1cf, 0x1e7, 0x1f5,
    ),
    9: (
        0x211, 0x21b, 0x221, 0x22d, 0x233, 0x259, 0x25f, 0x269, 0x26f, 0x277,
        0x27d, 0x287, 0x295, 0x2a3, 0x2a5, 0x2af, 0x2b7, 0x2bd, 0x2cf, 0x2d1,
        0x2db, 0x2f5, 0x2f9, 0x313, 0x315, 0x31f, 0x323, 0x331, 0x33b, 0x34f,
        0x35b, 0x361, 0x36b, 0x36d, 0x373, 0x37f, 0x385, 0x38f, 0x3b5, 0x3b9,
        0x3c7, 0x3cb, 0x3cd, 0x3d5, 0x3d9, 0x3e3, 0x3e9, 0x3fb,
    ),
    10: (
        0x409, 0x41b, 0x427, 0x42d, 0x465, 0x46f, 0x481, 0x48b, 0x4c5, 0x4d7,
        0x4e7, 0x4f3, 0x4ff, 0x50d, 0x519, 0x523, 0x531, 0x53d, 0x543, 0x557,
        0x56b, 0x585, 0x58f, 0x597, 0x5a1, 0x5c7, 0x5e5, 0x5f7, 0x5fb, 0x613,
        0x615, 0x625, 0x637, 0x643, 0x64f, 0x65b, 0x679, 0x67f, 0x689, 0x6b5,
        0x6c1, 0x6d3, 0x6df, 0x6fd, 0x717, 0x71d, 0x721, 0x739, 0x747, 0x74d,
        0x755, 0x759, 0x763, 0x77d, 0x78d, 0x793, 0x7b1, 0x7db, 0x7f3, 0x7f9,
    ),
    11: (
        0x805, 0x817, 0x82b, 0x82d, 0x847, 0x863, 0x865, 0x871, 0x87b, 0x88d,
        0x895, 0x89f, 0x8a9, 0x8b1, 0x8cf, 0x8d1, 0x8e1, 0x8e7, 0x8eb, 0x8f5,
        0x90d, 0x913, 0x925, 0x929, 0x93b, 0x93d, 0x945, 0x949, 0x951, 0x95b,
        0x973, 0x975, 0x97f, 0x983, 0x98f, 0x9ab, 0x9ad, 0x9b9, 0x9c7, 0x9d9,
        0x9e5, 0x9f7, 0xa01, 0xa07, 0xa13, 0xa15, 0xa29, 0xa49, 0xa61, 0xa6d,
        0xa79, 0xa7f, 0xa85, 0xa91, 0xa9d, 0xaa7, 0xaab, 0xab3, 0xab5, 0xad5,
        0xadf, 0xae9, 0xaef, 0xaf1, 0xafb, 0xb03, 0xb09, 0xb11, 0xb33, 0xb3f,
        0xb41, 0xb4b, 0xb59, 0xb5f, 0xb65, 0xb6f, 0xb7d, 0xb87, 0xb8b, 0xb93,
        0xb95, 0xbaf, 0xbb7, 0xbbd, 0xbc9, 0xbdb, 0xbdd, 0xbe7, 0xbed, 0xc0b,
        0xc0d, 0xc19, 0xc1f, 0xc57, 0xc61, 0xc6b, 0xc73, 0xc85, 0xc89, 0xc97,
        0xc9b, 0xc9d, 0xcb3, 0xcbf, 0xcc7, 0xccd, 0xcd3, 0xcd5, 0xce3, 0xce9,
        0xcf7, 0xd03, 0xd0f, 0xd1d, 0xd27, 0xd2d, 0xd41, 0xd47, 0xd55, 0xd59,
        0xd63, 0xd6f, 0xd71, 0xd93, 0xd9f, 0xda9, 0xdbb, 0xdbd, 0xdc9, 0xdd7,
        0xddb, 0xde1, 0xde7, 0xdf5, 0xe05, 0xe1d, 0xe21, 0xe27, 0xe2b, 0xe33,
        0xe39, 0xe47, 0xe4b, 0xe55, 0xe5f, 0xe71, 0xe7b, 0xe7d, 0xe81, 0xe93,
        0xe9f, 0xea3, 0xebb, 0xecf, 0xedd, 0xef3, 0xef9, 0xf0b, 0xf19, 0xf31,
        0xf37, 0xf5d, 0xf6b, 0xf6d, 0xf75, 0xf83, 0xf91, 0xf97, 0xf9b, 0xfa7,
        0xfad, 0xfb5, 0xfcd, 0xfd3, 0xfe5, 0xfe9,
    ),
    12: (
        0x1053, 0x1069, 0x107b, 0x107d, 0x1099, 0x10d1, 0x10eb, 0x1107, 0x111f, 0x1123,
        0x113b, 0x114f, 0x1157, 0x1161, 0x116b, 0x1185, 0x11b3, 0x11d9, 0x11df, 0x120d,
        0x1237, 0x123d, 0x1267, 0x1273, 0x127f, 0x12b9, 0x12c1, 0x12cb, 0x130f, 0x131d,
        0x1321, 0x1339, 0x133f, 0x134d, 0x1371, 0x1399, 0x13a3, 0x13a9, 0x1407, 0x1431,
        0x1437, 0x144f, 0x145d, 0x1467, 0x1475, 0x14a7, 0x14ad, 0x14d3, 0x150f, 0x151d,
        0x154d, 0x1593, 0x15c5, 0x15d7, 0x15dd, 0x15eb, 0x1609, 0x1647, 0x1655, 0x1659,
        0x16a5, 0x16bd, 0x1715, 0x1719, 0x1743, 0x1745, 0x1775, 0x1789, 0x17ad, 0x17b3,
        0x17bf, 0x17c1, 0x1857, 0x185d, 0x1891, 0x1897, 0x18b9, 0x18ef, 0x191b, 0x1935,
        0x1941, 0x1965, 0x197b, 0x198b, 0x19b1, 0x19bd, 0x19c9, 0x19cf, 0x19e7, 0x1a1b,
        0x1a2b, 0x1a33, 0x1a69, 0x1a8b, 0x1ad1, 0x1ae1, 0x1af5, 0x1b0b, 0x1b13, 0x1b1f,
        0x1b57, 0x1b91, 0x1ba7, 0x1bbf, 0x1bc1, 0x1bd3, 0x1c05, 0x1c11, 0x1c17, 0x1c27,
        0x1c4d, 0x1c87, 0x1c9f, 0x1ca5, 0x1cbb, 0x1cc5, 0x1cc9, 0x1ccf, 0x1cf3, 0x1d07,
        0x1d23, 0x1d43, 0x1d51, 0x1d5b, 0x1d75, 0x1d85, 0x1d89, 0x1e15, 0x1e19, 0x1e2f,
        0x1e45, 0x1e51, 0x1e67, 0x1e73, 0x1e8f, 0x1ee3, 0x1f11, 0x1f1b, 0x1f27, 0x1f71,
        0x1f99, 0x1fbb, 0x1fbd, 0x1fc9,
    ),
    13: (
        0x201b, 0x2027, 0x2035, 0x2053, 0x2065, 0x206f, 0x208b, 0x208d, 0x209f, 0x20a5,
        0x20af, 0x20bb, 0x20bd, 0x20c3, 0x20c9, 0x20e1, 0x20f3, 0x210d, 0x2115, 0x2129,
        0x212f, 0x213b, 0x2143, 0x2167, 0x216b, 0x2179, 0x2189, 0x2197, 0x219d, 0x21bf,
        0x21c1, 0x21c7, 0x21cd, 0x21df, 0x21e3, 0x21f1, 0x21fb, 0x2219, 0x2225, 0x2237,
        0x223d, 0x2243, 0x225b, 0x225d, 0x2279, 0x227f, 0x2289, 0x2297, 0x229b, 0x22b3,
        0x22bf, 0x22cd, 0x22ef, 0x22f7, 0x22fb, 0x2305, 0x2327, 0x232b, 0x2347, 0x2355,
        0x2359, 0x236f, 0x2371, 0x237d, 0x2387, 0x238d, 0x2395, 0x23a3, 0x23a9, 0x23b1,
        0x23b7, 0x23bb, 0x23e1, 0x23ed, 0x23f9, 0x240b, 0x2413, 0x241f, 0x2425, 0x2429,
        0x243d, 0x2451, 0x2457, 0x2461, 0x246d, 0x247f, 0x2483, 0x249b, 0x249d, 0x24b5,
        0x24bf, 0x24c1, 0x24c7, 0x24cb, 0x24e3, 0x2509, 0x2517, 0x251d, 0x2521, 0x252d,
        0x2539, 0x2553, 0x2555, 0x2563, 0x2571, 0x2577, 0x2587, 0x258b, 0x2595, 0x2599,
        0x259f, 0x25af, 0x25bd, 0x25c5, 0x25cf, 0x25d7, 0x25eb, 0x2603, 0x2605, 0x2611,
        0x262d, 0x263f, 0x264b, 0x2653, 0x2659, 0x2669, 0x2677, 0x267b, 0x2687, 0x2693,
        0x2699, 0x26b1, 0x26b7, 0x26bd, 0x26c3, 0x26eb, 0x26f5, 0x2713, 0x2729, 0x273b,
        0x274f, 0x2757, 0x275d, 0x276b, 0x2773, 0x2779, 0x2783, 0x2791, 0x27a1, 0x27b9,
        0x27c7, 0x27cb, 0x27df, 0x27ef, 0x27f1, 0x2807, 0x2819, 0x281f, 0x2823, 0x2831,
        0x283b, 0x283d, 0x2845, 0x2867, 0x2875, 0x2885, 0x28ab, 0x28ad, 0x28bf, 0x28cd,
        0x28d5, 0x28df, 0x28e3, 0x28e9, 0x28fb, 0x2909, 0x290f, 0x2911, 0x291b, 0x292b,
        0x2935, 0x293f, 0x2941, 0x294b, 0x2955, 0x2977, 0x297d, 0x2981, 0x2993, 0x299f,
        0x29af, 0x29b7, 0x29bd, 0x29c3, 0x29d7, 0x29f3, 0x29f5, 0x2a03, 0x2a0f, 0x2a1d,
        0x2a21, 0x2a33, 0x2a35, 0x2a4d, 0x2a69, 0x2a6f, 0x2a71, 0x2a7b, 0x2a7d, 0x2aa5,
        0x2aa9, 0x2ab1, 0x2ac5, 0x2ad7, 0x2adb, 0x2aeb, 0x2af3, 0x2b01, 0x2b15, 0x2b23,
        0x2b25, 0x2b2f, 0x2b37, 0x2b43, 0x2b49, 0x2b6d, 0x2b7f, 0x2b85, 0x2b97, 0x2b9b,
        0x2bad, 0x2bb3, 0x2bd9, 0x2be5, 0x2bfd, 0x2c0f, 0x2c21, 0x2c2b, 0x2c2d, 0x2c3f,
        0x2c41, 0x2c4d, 0x2c71, 0x2c8b, 0x2c8d, 0x2c95, 0x2ca3, 0x2caf, 0x2cbd, 0x2cc5,
        0x2cd1, 0x2cd7, 0x2ce1, 0x2ce7, 0x2ceb, 0x2d0d, 0x2d19, 0x2d29, 0x2d2f, 0x2d37,
        0x2d3b, 0x2d45, 0x2d5b, 0x2d67, 0x2d75, 0x2d89, 0x2d8f, 0x2da7, 0x2dab, 0x2db5,
        0x2de3, 0x2df1, 0x2dfd, 0x2e07, 0x2e13, 0x2e15, 0x2e29, 0x2e49, 0x2e4f, 0x2e5b,
        0x2e5d, 0x2e61, 0x2e6b, 0x2e8f, 0x2e91, 0x2e97, 0x2e9d, 0x2eab, 0x2eb3, 0x2eb9,
        0x2edf, 0x2efb, 0x2efd, 0x2f05, 0x2f09, 0x2f11, 0x2f17, 0x2f3f, 0x2f41, 0x2f4b,
        0x2f4d, 0x2f59, 0x2f5f, 0x2f65, 0x2f69, 0x2f95, 0x2fa5, 0x2faf, 0x2fb1, 0x2fcf,
        0x2fdd, 0x2fe7, 0x2fed, 0x2ff5, 0x2fff, 0x3007, 0x3015, 0x3019, 0x302f, 0x3049,
        0x304f, 0x3067, 0x3079, 0x307f, 0x3091, 0x30a1, 0x30b5, 0x30bf, 0x30c1, 0x30d3,
        0x30d9, 0x30e5, 0x30ef, 0x3105, 0x310f, 0x3135, 0x3147, 0x314d, 0x315f, 0x3163,
        0x3171, 0x317b, 0x31a3, 0x31a9, 0x31b7, 0x31c5, 0x31c9, 0x31db, 0x31e1, 0x31eb,
        0x31ed, 0x31f3, 0x31ff, 0x3209, 0x320f, 0x321d, 0x3227, 0x3239, 0x324b, 0x3253,
        0x3259, 0x3265, 0x3281, 0x3293, 0x3299, 0x329f, 0x32a9, 0x32b7, 0x32bb, 0x32c3,
        0x32d7, 0x32db, 0x32e7, 0x3307, 0x3315, 0x332f, 0x3351, 0x335d, 0x3375, 0x3397,
        0x339b, 0x33ab, 0x33b9, 0x33c1, 0x33c7, 0x33d5, 0x33e3, 0x33e5, 0x33f7, 0x33fb,
        0x3409, 0x341b, 0x3427, 0x3441, 0x344d, 0x345f, 0x3469, 0x3477, 0x347b, 0x3487,
        0x3493, 0x3499, 0x34a5, 0x34bd, 0x34c9, 0x34db, 0x34e7, 0x34f9, 0x350d, 0x351f,
        0x3525, 0x3531, 0x3537, 0x3545, 0x354f, 0x355d, 0x356d, 0x3573, 0x357f, 0x359d,
        0x35a1, 0x35b9, 0x35cd, 0x35d5, 0x35d9, 0x35e3, 0x35e9, 0x35ef, 0x3601, 0x360b,
        0x361f, 0x3625, 0x362f, 0x363b, 0x3649, 0x3651, 0x365b, 0x3673, 0x3675, 0x3691,
        0x369b, 0x369d, 0x36ad, 0x36cb, 0x36d3, 0x36d5, 0x36e3, 0x36ef, 0x3705, 0x370f,
        0x371b, 0x3721, 0x372d, 0x3739, 0x3741, 0x3747, 0x3753, 0x3771, 0x3777, 0x378b,
        0x3795, 0x3799, 0x37a3, 0x37c5, 0x37cf, 0x37d1, 0x37d7, 0x37dd, 0x37e1, 0x37f3,
        0x3803, 0x3805, 0x3817, 0x381d, 0x3827, 0x3833, 0x384b, 0x3859, 0x3869, 0x3871,
        0x38a3, 0x38b1, 0x38bb, 0x38c9, 0x38cf, 0x38e1, 0x38f3, 0x38f9, 0x3901, 0x3907,
        0x390b, 0x3913, 0x3931, 0x394f, 0x3967, 0x396d, 0x3983, 0x3985, 0x3997, 0x39a1,
        0x39a7, 0x39ad, 0x39cb, 0x39cd, 0x39d3, 0x39ef, 0x39f7, 0x39fd, 0x3a07, 0x3a29,
        0x3a2f, 0x3a3d, 0x3a51, 0x3a5d, 0x3a61, 0x3a67, 0x3a73, 0x3a75, 0x3a89, 0x3ab9,
        0x3abf, 0x3acd, 0x3ad3, 0x3ad5, 0x3adf, 0x3ae5, 0x3ae9, 0x3afb, 0x3b11, 0x3b2b,
        0x3b2d, 0x3b35, 0x3b3f, 0x3b53, 0x3b59, 0x3b63, 0x3b65, 0x3b6f, 0x3b71, 0x3b77,
        0x3b8b, 0x3b99, 0x3ba5, 0x3ba9, 0x3bb7, 0x3bbb, 0x3bd1, 0x3be7, 0x3bf3, 0x3bff,
        0x3c0d, 0x3c13, 0x3c15, 0x3c1f, 0x3c23, 0x3c25, 0x3c3b, 0x3c4f, 0x3c5d, 0x3c6d,
        0x3c83, 0x3c8f, 0x3c9d, 0x3ca7, 0x3cab, 0x3cb9, 0x3cc7, 0x3ce9, 0x3cfb, 0x3cfd,
        0x3d03, 0x3d17, 0x3d1b, 0x3d21, 0x3d2d, 0x3d33, 0x3d35, 0x3d41, 0x3d4d, 0x3d65,
        0x3d69, 0x3d7d, 0x3d81, 0x3d95, 0x3db1, 0x3db7, 0x3dc3, 0x3dd1, 0x3ddb, 0x3de7,
        0x3deb, 0x3df9, 0x3e05, 0x3e09, 0x3e0f, 0x3e1b, 0x3e2b, 0x3e3f, 0x3e41, 0x3e53,
        0x3e65, 0x3e69, 0x3e8b, 0x3ea3, 0x3ebd, 0x3ec5, 0x3ed7, 0x3edd, 0x3ee1, 0x3ef9,
        0x3f0d, 0x3f19, 0x3f1f, 0x3f25, 0x3f37, 0x3f3d, 0x3f43, 0x3f45, 0x3f49, 0x3f51,
        0x3f57, 0x3f61, 0x3f83, 0x3f89, 0x3f91, 0x3fab, 0x3fb5, 0x3fe3, 0x3ff7, 0x3ffd,
    ),
}

# (base polynomial, partner polynomial) per odd degree; the partner
# generates the decimation-by-3 orbit of the base m-sequence, which
# makes the pair preferred (3-valued cross-correlation)
GOLD_PREFERRED_PAIRS = {
    5: (0x25, 0x3d),
    7: (0x83, 0xab),
    9: (0x211, 0x259),
    11: (0x805, 0x925),
}
