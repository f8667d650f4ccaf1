/* Traffic light controller and a vending machine, as explicit state machines. */

struct Light {
    int state;
    int timer;
    int cycles;
};

int light_duration(int state) {
    if (state == 0) {
        return 30;
    } else if (state == 1) {
        return 5;
    }
    return 25;
}

void light_init(struct Light *l) {
    l->state = 0;
    l->timer = light_duration(0);
    l->cycles = 0;
}

void light_tick(struct Light *l) {
    l->timer = l->timer - 1;
    if (l->timer > 0) {
        return;
    }
    l->state = (l->state + 1) % 3;
    if (l->state == 0) {
        l->cycles = l->cycles + 1;
    }
    l->timer = light_duration(l->state);
}

int simulate_light(int ticks) {
    struct Light l;
    int i = 0;
    light_init(&l);
    while (i < ticks) {
        light_tick(&l);
        i = i + 1;
    }
    return l.cycles;
}

struct Vendor {
    int credit;
    int stock;
    int sales;
    int refunds;
};

void vendor_init(struct Vendor *v, int stock) {
    v->credit = 0;
    v->stock = stock;
    v->sales = 0;
    v->refunds = 0;
}

int vendor_insert(struct Vendor *v, int coin) {
    if (coin != 5 && coin != 10 && coin != 25) {
        v->refunds = v->refunds + coin;
        return 0;
    }
    v->credit = v->credit + coin;
    return 1;
}

int vendor_select(struct Vendor *v, int price) {
    int change;
    if (v->stock == 0) {
        return -1;
    }
    if (v->credit < price) {
        return -2;
    }
    change = v->credit - price;
    v->credit = 0;
    v->stock = v->stock - 1;
    v->sales = v->sales + 1;
    return change;
}

int run_vendor(char *events) {
    struct Vendor v;
    int change = 0;
    char *e = events;
    vendor_init(&v, 3);
    while (*e != 0) {
        if (*e == 'n') {
            vendor_insert(&v, 5);
        } else if (*e == 'd') {
            vendor_insert(&v, 10);
        } else if (*e == 'q') {
            vendor_insert(&v, 25);
        } else if (*e == 's') {
            change = change + vendor_select(&v, 35);
        } else {
            v.refunds = v.refunds + v.credit;
            v.credit = 0;
        }
        e = e + 1;
    }
    return v.sales * 100 + change;
}

int parse_state(char *word) {
    int state = 0;
    char *p = word;
    while (*p != 0) {
        if (state == 0) {
            state = *p == 'a' ? 1 : 0;
        } else if (state == 1) {
            state = *p == 'b' ? 2 : (*p == 'a' ? 1 : 0);
        } else if (state == 2) {
            state = *p == 'c' ? 3 : (*p == 'a' ? 1 : 0);
        } else {
            break;
        }
        p = p + 1;
    }
    return state == 3;
}
