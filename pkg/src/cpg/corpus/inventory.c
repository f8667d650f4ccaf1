/* Inventory records with reorder logic. Uses an external logger. */

struct Product {
    int sku;
    int quantity;
    int reorder_level;
    int price;
    struct Product *next;
};

struct Inventory {
    struct Product *items;
    int value;
    int warnings;
};

void inv_init(struct Inventory *inv) {
    inv->items = NULL;
    inv->value = 0;
    inv->warnings = 0;
}

struct Product *inv_find(struct Inventory *inv, int sku) {
    struct Product *p = inv->items;
    while (p != NULL) {
        if (p->sku == sku) {
            return p;
        }
        p = p->next;
    }
    return NULL;
}

int inv_add(struct Inventory *inv, int sku, int quantity, int price) {
    struct Product *p = inv_find(inv, sku);
    if (p != NULL) {
        p->quantity = p->quantity + quantity;
        inv->value = inv->value + quantity * p->price;
        return p->quantity;
    }
    p = malloc(40);
    if (p == NULL) {
        log_error("out of memory", sku);
        return -1;
    }
    p->sku = sku;
    p->quantity = quantity;
    p->price = price;
    p->reorder_level = quantity / 4;
    p->next = inv->items;
    inv->items = p;
    inv->value = inv->value + quantity * price;
    return quantity;
}

int inv_remove(struct Inventory *inv, int sku, int quantity) {
    struct Product *p = inv_find(inv, sku);
    if (p == NULL) {
        log_error("unknown sku", sku);
        return -1;
    }
    if (p->quantity < quantity) {
        quantity = p->quantity;
    }
    p->quantity = p->quantity - quantity;
    inv->value = inv->value - quantity * p->price;
    if (p->quantity <= p->reorder_level) {
        inv->warnings = inv->warnings + 1;
        log_warning("reorder", sku, p->quantity);
    }
    return quantity;
}

int inv_count_low(struct Inventory *inv) {
    int low = 0;
    struct Product *p;
    for (p = inv->items; p != NULL; p = p->next) {
        if (p->quantity <= p->reorder_level) {
            low = low + 1;
        }
    }
    return low;
}

int inv_recompute_value(struct Inventory *inv) {
    int value = 0;
    struct Product *p = inv->items;
    while (p != NULL) {
        value = value + p->quantity * p->price;
        p = p->next;
    }
    if (value != inv->value) {
        log_warning("value drift", value, inv->value);
        inv->value = value;
    }
    return value;
}

int inv_most_valuable(struct Inventory *inv) {
    struct Product *p = inv->items;
    int best_sku = -1;
    int best_value = -1;
    int v;
    while (p != NULL) {
        v = p->quantity * p->price;
        if (v > best_value) {
            best_value = v;
            best_sku = p->sku;
        }
        p = p->next;
    }
    return best_sku;
}
