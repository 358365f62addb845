#pragma once

// Generated by tools/derive_base_sequences. Do not edit by hand.

namespace fanoweb {

inline constexpr const char* kBaseSequencesJson = R"json({
 "T:inf": {
  "box": 3,
  "sequence": {
   "class": "terminal",
   "steps": [
    {
     "kind": "III_m",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "I_m",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ]
     },
     "right": {
      "set": [
       [
        -2,
        -1
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -2,
        -1
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ]
     }
    }
   ],
   "joints": [
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ],
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ],
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ]
   ]
  }
 },
 "T:0": {
  "box": 3,
  "sequence": {
   "class": "terminal",
   "steps": [
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    }
   ],
   "joints": [
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ]
   ]
  }
 },
 "T:1": {
  "box": 3,
  "sequence": {
   "class": "terminal",
   "steps": [
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    }
   ],
   "joints": [
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ]
   ]
  }
 },
 "T:2": {
  "box": 3,
  "sequence": {
   "class": "canonical",
   "steps": [
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -3,
        -1
       ],
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -3,
        -1
       ],
       [
        -1,
        0
       ],
       [
        1,
        0
       ],
       [
        1,
        1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    }
   ],
   "joints": [
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ]
   ]
  }
 },
 "U:inf": {
  "box": 3,
  "sequence": {
   "class": "terminal",
   "steps": [
    {
     "kind": "III_m",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "I_m",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ]
      ]
     }
    }
   ],
   "joints": [
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ],
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ],
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ]
   ]
  }
 },
 "U:0": {
  "box": 3,
  "sequence": {
   "class": "terminal",
   "steps": [],
   "joints": []
  }
 },
 "U:1": {
  "box": 3,
  "sequence": {
   "class": "terminal",
   "steps": [
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    }
   ],
   "joints": [
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ]
   ]
  }
 },
 "U:2": {
  "box": 3,
  "sequence": {
   "class": "canonical",
   "steps": [
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -2,
        -1
       ],
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        -1
       ],
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        -1
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    },
    {
     "kind": "II_ni",
     "mode": "polytope",
     "left": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "middle": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        -1
       ],
       [
        1,
        0
       ],
       [
        2,
        -1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     },
     "right": {
      "set": [
       [
        -1,
        0
       ],
       [
        0,
        1
       ],
       [
        1,
        0
       ],
       [
        2,
        -1
       ]
      ],
      "fiber": [
       [
        -1,
        0
       ],
       [
        1,
        0
       ]
      ]
     }
    }
   ],
   "joints": [
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ],
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ],
    [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ]
   ]
  }
 }
})json";

}  // namespace fanoweb
